#ifndef TORIC_IO_HPP
#define TORIC_IO_HPP

#include "toric/distance.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace toric::io {

// Polytope file format: {"vertices": [[int,...],...]}, all rows equal length.
LatticePolytope read_polytope_json(std::istream& in);
LatticePolytope load_polytope(const std::string& path);

// Field spec: "q=<int>" (factored into a prime power) or "p=<int>,m=<int>".
GaloisField parse_field_spec(const std::string& spec, const Guards& guards = {});

// Generator matrix text: header "q=<q> r=<r> n=<n> k=<k>", then k rows of n
// whitespace-separated entries; integer encodings by default, discrete logs
// when as_logs is set (valid since no entry is zero).
std::string genmat_text(const ToricCode& code, bool as_logs);

nlohmann::json report_to_json(const DistanceReport& report);

}  // namespace toric::io

#endif
