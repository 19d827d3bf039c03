#ifndef QSEMI_SERIALIZE_HPP_
#define QSEMI_SERIALIZE_HPP_

#include <string>  // for string

#include "json.hpp"  // for nlohmann::ordered_json

#include "algebra.hpp"     // for AlgebraElement, ZeroDivisorResult
#include "lemmas.hpp"      // for LemmaReport
#include "quaternion.hpp"  // for GroupTable, GroupLabel
#include "structure.hpp"   // for SweepSummary, CancellationReport

namespace qsemi {

  using json = nlohmann::ordered_json;

  //! "1", "t", "t^3", "u", "t^2 u".
  [[nodiscard]] std::string to_string(GroupLabel g);

  [[nodiscard]] json to_json(GroupTable const& g);
  [[nodiscard]] json to_json(Counterexample const& c);
  [[nodiscard]] json to_json(LemmaReport const& r);
  [[nodiscard]] json to_json(SweepSummary const& s);
  [[nodiscard]] json to_json(CancellationReport const& r);
  [[nodiscard]] json to_json(AlgebraElement const& x);
  [[nodiscard]] json to_json(ZeroDivisorResult const& r);

  //! {"p": 2, "terms": [{"coef": 1, "word": "1,2"}, ...]}
  [[nodiscard]] AlgebraElement element_from_json(json const& j, Normalizer const& nf);

}  // namespace qsemi

#endif  // QSEMI_SERIALIZE_HPP_
