#include "report.hpp"

namespace critic {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "HOLDS";
    case Verdict::Violated:
      return "VIOLATED";
    case Verdict::PremiseUnsatisfied:
      return "PREMISE_UNSATISFIED";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

njson LemmaReport::to_json() const {
  return njson{{"lemma", lemma},
               {"graph6", graph6},
               {"params", params},
               {"verdict", verdict_name(verdict)},
               {"witness", witness.is_null() ? njson(nullptr) : witness},
               {"lhs", lhs},
               {"rhs", rhs}};
}

njson rational_json(const Rational& r) { return njson(r.str()); }

}  // namespace critic
