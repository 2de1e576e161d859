#include "tropcrit/quiver.hpp"

#include <sstream>
#include <stdexcept>

namespace tropcrit {

namespace {

std::string idx2(int i, int j) {
    if (i < 10 && j < 10) return std::to_string(i) + std::to_string(j);
    return std::to_string(i) + "_" + std::to_string(j);
}

} // namespace

Quiver build_quiver(int n) {
    if (n < 2) throw std::invalid_argument("quiver needs n >= 2");
    Quiver q;
    q.n_ = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) q.vertices_.push_back({i, j, i == j, "x" + idx2(i, j)});
    q.in_.resize(q.vertices_.size());
    q.out_.resize(q.vertices_.size());
    auto add = [&](int ti, int tj, int hi, int hj, bool vertical) {
        Arrow a{q.vertex(ti, tj), q.vertex(hi, hj), vertical, (vertical ? "z" : "h") + idx2(hi, hj)};
        int id = static_cast<int>(q.arrows_.size());
        q.arrows_.push_back(a);
        q.out_[static_cast<std::size_t>(a.tail)].push_back(id);
        q.in_[static_cast<std::size_t>(a.head)].push_back(id);
    };
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= i; ++j) add(i + 1, j, i, j, true);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) add(i, j + 1, i, j, false);
    if (n == 3) {
        const char* names[][2] = {{"z21", "b"}, {"z11", "a"}, {"z22", "d"},
                                  {"h21", "c"}, {"h31", "e"}, {"h32", "f"}};
        for (auto& a : q.arrows_)
            for (auto& p : names)
                if (a.label == p[0]) a.label = p[1];
    }
    for (int i = 2; i < n; ++i)
        for (int j = 1; j < i; ++j)
            q.boxes_.push_back({q.horizontal_into(i, j), q.vertical_into(i, j), q.vertical_into(i, j + 1),
                                q.horizontal_into(i + 1, j)});
    return q;
}

int Quiver::vertex(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > i) return -1;
    return (i - 1) * i / 2 + (j - 1);
}

int Quiver::arrow_by_label(const std::string& label) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].label == label) return static_cast<int>(a);
    return -1;
}

int Quiver::vertical_into(int i, int j) const {
    int v = vertex(i, j);
    if (v < 0) return -1;
    for (int a : incoming(v))
        if (arrows_[static_cast<std::size_t>(a)].vertical) return a;
    return -1;
}

int Quiver::horizontal_into(int i, int j) const {
    int v = vertex(i, j);
    if (v < 0) return -1;
    for (int a : incoming(v))
        if (!arrows_[static_cast<std::size_t>(a)].vertical) return a;
    return -1;
}

std::vector<int> Quiver::diagonal(int k) const {
    std::vector<int> d;
    for (int i = k, j = 1; i <= n_; ++i, ++j) d.push_back(vertex(i, j));
    return d;
}

std::vector<int> Quiver::bullets() const {
    std::vector<int> b;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (!vertices_[v].star) b.push_back(static_cast<int>(v));
    return b;
}

std::vector<std::string> Quiver::vertex_names() const {
    std::vector<std::string> s;
    for (const auto& v : vertices_) s.push_back(v.name);
    return s;
}

std::vector<std::string> Quiver::arrow_labels() const {
    std::vector<std::string> s;
    for (const auto& a : arrows_) s.push_back(a.label);
    return s;
}

std::string Quiver::to_dot() const {
    std::ostringstream os;
    os << "digraph quiver {\n  node [shape=circle];\n";
    for (const auto& v : vertices_)
        os << "  " << v.name << " [label=\"v" << v.i << "," << v.j << "\"" << (v.star ? ", shape=star" : "")
           << ", pos=\"" << v.j << "," << -v.i << "!\"];\n";
    for (const auto& a : arrows_)
        os << "  " << vertices_[static_cast<std::size_t>(a.tail)].name << " -> "
           << vertices_[static_cast<std::size_t>(a.head)].name << " [label=\"" << a.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::vector<QuiverPath> enumerate_paths(const Quiver& q, const std::vector<bool>& ends,
                                        const std::vector<bool>& forbidden) {
    std::vector<QuiverPath> out;
    QuiverPath cur;
    auto blocked = [&](int a) { return !forbidden.empty() && forbidden[static_cast<std::size_t>(a)]; };
    auto rec = [&](auto&& self, int v) -> void {
        for (int a : q.outgoing(v)) {
            if (blocked(a)) continue;
            int h = q.arrows()[static_cast<std::size_t>(a)].head;
            cur.arrows.push_back(a);
            cur.vertices.push_back(h);
            if (ends[static_cast<std::size_t>(h)]) {
                QuiverPath p = cur;
                p.end = h;
                out.push_back(std::move(p));
            } else {
                self(self, h);
            }
            cur.arrows.pop_back();
            cur.vertices.pop_back();
        }
    };
    for (std::size_t s = 0; s < q.vertices().size(); ++s) {
        if (!ends[s]) continue;
        cur = QuiverPath{};
        cur.start = static_cast<int>(s);
        cur.vertices = {static_cast<int>(s)};
        rec(rec, static_cast<int>(s));
    }
    return out;
}

} // namespace tropcrit
