// The triangular quiver for SL_n: vertices v_ij (1 <= j <= i <= n), arrows pointing up and left,
// stars on the diagonal.
#pragma once

#include <string>
#include <vector>

namespace tropcrit {

struct Vertex {
    int i = 0, j = 0;
    bool star = false;
    std::string name; // "x{i}{j}"
};

struct Arrow {
    int tail = 0, head = 0; // vertex ids
    bool vertical = false;
    std::string label;
};

// Unit square v_ij, v_{i,j+1}, v_{i+1,j}, v_{i+1,j+1}; z_top z_right = z_left z_bottom.
struct Box {
    int top, left, right, bottom; // arrow ids
};

struct QuiverPath {
    std::vector<int> arrows;
    int start = -1, end = -1;
    std::vector<int> vertices; // in path order, endpoints included
    int len() const { return static_cast<int>(arrows.size()); }
};

class Quiver {
public:
    int n() const { return n_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Box>& boxes() const { return boxes_; }

    int vertex(int i, int j) const; // -1 if absent
    int star(int i) const { return vertex(i, i); }
    const std::vector<int>& incoming(int v) const { return in_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& outgoing(int v) const { return out_[static_cast<std::size_t>(v)]; }
    int arrow_by_label(const std::string& label) const;
    // Vertical arrow with head v_ij and horizontal arrow with head v_ij.
    int vertical_into(int i, int j) const;
    int horizontal_into(int i, int j) const;

    // D_k = {v_{k,1}, v_{k+1,2}, ...}, k = 1..n; D_1 is the set of stars.
    std::vector<int> diagonal(int k) const;
    std::vector<int> bullets() const;
    std::vector<std::string> vertex_names() const;
    std::vector<std::string> arrow_labels() const;

    std::string to_dot() const;

private:
    friend Quiver build_quiver(int n);
    int n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Box> boxes_;
    std::vector<std::vector<int>> in_, out_;
};

Quiver build_quiver(int n);

// Directed paths starting and ending in `ends`, all interior vertices outside it,
// avoiding arrows flagged in `forbidden` (indexed by arrow id; may be empty).
std::vector<QuiverPath> enumerate_paths(const Quiver& q, const std::vector<bool>& ends,
                                        const std::vector<bool>& forbidden = {});

} // namespace tropcrit
