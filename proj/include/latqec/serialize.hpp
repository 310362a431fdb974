#ifndef LATQEC_SERIALIZE_HPP
#define LATQEC_SERIALIZE_HPP

#include "latqec/distance.hpp"
#include "latqec/injection.hpp"
#include "latqec/symmetry.hpp"

#include "json.hpp"

#include <string>

namespace latqec {

using Json = nlohmann::ordered_json;

Json lattice_to_json(const LatticeBasis &b);
LatticeBasis lattice_from_json(const Json &j);

// Inline row syntax "1,0,4;0,1,5;0,0,7".
LatticeBasis lattice_from_string(const std::string &s);

Json hnf_to_json(const HermiteForm &h);

// Sparse coordinate export of the boundary maps.
Json complex_to_json(const ChainComplex &c);

Json bitmat_to_json(const BitMat &m);
BitMat bitmat_from_json(const Json &j);

Json code_to_json(const StabilizerCode &code);

Json distance_report_to_json(const DistanceReport &r);

Json injection_sets_to_json(const InjectionSets &s);

Json space_group_to_json(const SpaceGroupElement &g);

// MacKay alist text for a binary matrix.
std::string bitmat_to_alist(const BitMat &m);
BitMat bitmat_from_alist(const std::string &text);

}  // namespace latqec

#endif
