#ifndef FFACTOR_SERIALIZATION_HPP_
#define FFACTOR_SERIALIZATION_HPP_

#include <string>
#include <vector>

#include "ffactor/factor.hpp"
#include "ffactor/fingroup.hpp"
#include "ffactor/gog.hpp"
#include "ffactor/homcount.hpp"
#include "ffactor/presentation.hpp"
#include "ffactor/subgroup.hpp"
#include "ffactor/wordmeasure.hpp"
#include "json.hpp"

namespace ffactor {

  using Json = nlohmann::ordered_json;

  class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Group descriptors: {"kind": "cyclic", "n": 2}, symmetric, alternating,
  // dihedral, quaternion8, product (factors), table, perm (degree,
  // generators). A bare string is looked up with group_by_name.
  FiniteGroup group_from_json(Json const& j);

  // C4, S3, A4, D4 (dihedral-4, order 8), Q8, C2xC2, or a display name such as
  // "symmetric-3" or "cyclic-2 x cyclic-2".
  FiniteGroup group_by_name(std::string const& name);

  // Comma separated names, or the default catalog cut at max_order.
  std::vector<FiniteGroup> catalog_from_names(std::string const& names);
  std::vector<FiniteGroup> catalog_up_to(std::size_t max_order);

  Presentation presentation_from_json(Json const& j);
  Json         to_json(Presentation const& p);

  Constraint constraint_from_json(Json const& j, Presentation const& g);
  Json       to_json(Constraint const& c);

  // {"presentation": {...}, "embedding": {"h1": "x y", ...}}, or for free G
  // a plain list of words (the Stallings basis becomes H's generators).
  SubgroupSpec subgroup_from_json(Json const& j, Presentation const& g);
  Json         to_json(SubgroupSpec const& h);

  GraphOfGroups graph_from_json(Json const& j);

  Json to_json(Rational const& r);
  Json to_json(HomCountReport const& r);
  Json to_json(ConstancyReport const& r);
  Json to_json(ScanVerdict const& v);
  Json to_json(FactorDecision const& d);
  Json to_json(CorestrictionCheck const& c);
  Json to_json(FundamentalPresentation const& fp);
  Json to_json(WordDistribution const& d);

  std::string to_string(ScanOutcome o);
  std::string to_string(Decision d);

}  // namespace ffactor

#endif  // FFACTOR_SERIALIZATION_HPP_
