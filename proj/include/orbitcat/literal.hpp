#ifndef ORBITCAT_LITERAL_HPP
#define ORBITCAT_LITERAL_HPP

#include <string_view>
#include <vector>

#include "orbitcat/derived.hpp"

namespace orbitcat
{

// Object literals:
//   P_a  I_b[1]  S_c[-2]  dim=(0,1,1)[1]  F(P_a)  F^-2(S_b)[1]  tau^3(P_d)
// The shift defaults to 0.
DerivedObject parse_object(DerivedModel const &model, std::string_view text);

// Comma-separated list of literals.
std::vector<DerivedObject> parse_object_list(DerivedModel const &model,
                                             std::string_view text);

// "(1,0,2)" or "1,0,2", optionally prefixed by "dim=".
DimVector parse_dim_vector(std::string_view text);

} // namespace orbitcat

#endif // ORBITCAT_LITERAL_HPP
