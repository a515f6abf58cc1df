#pragma once

#include <string>

#include "graph.hpp"
#include "rational.hpp"

#include "json.hpp"

namespace critic {

using njson = nlohmann::ordered_json;

enum class Verdict { Holds, Violated, PremiseUnsatisfied, Inconclusive };

const char* verdict_name(Verdict v);

// One verification outcome for one (graph, check, parameters) triple.  lhs and
// rhs carry the decisive exact comparison as "num/den" strings when the check
// is a numeric bound; witness is a free-form object (violating pair, chosen
// vertex, sample counts, ...) or null.
struct LemmaReport {
  std::string lemma;
  std::string graph6;
  njson params = njson::object();
  Verdict verdict = Verdict::Inconclusive;
  njson witness;  // null unless set
  std::string lhs, rhs;

  njson to_json() const;
};

njson rational_json(const Rational& r);  // "num/den" string

}  // namespace critic
