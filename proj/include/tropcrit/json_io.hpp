// JSON encodings of the library's results. Exact rationals are strings ("13/6"); doubles stay
// numbers.
#pragma once

#include "tropcrit/crit.hpp"
#include "tropcrit/errors.hpp"
#include "tropcrit/polytope.hpp"
#include "tropcrit/sections.hpp"
#include "tropcrit/tropsolve.hpp"

#include <json.hpp>

namespace tropcrit {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const DominantWeight& w);
Json to_json(const ParabolicType& p);

Json tropical_json(const Quiver& q, const TropicalPoint& p);
Json filling_json(const IdealFilling& f);
Json chain_json(const ChainDecomposition& c);
Json expansion_json(const CriticalExpansion& e);
// {"A": [[..]], "b": [..]} plus forms and lattice points
Json polytope_json(const StringPolytope& P);
Json section_json(const SectionFunction& s);
// {"n","lambda","word","nu","nu_vee","equal"}
Json conjecture_json(const ConjectureReport& r);
Json sweep_case_json(const SweepCase& c);
Json error_json(const Error& e);
Json error_json(const std::string& code, const std::string& message);

} // namespace tropcrit
