#include "sigma_bounds.hpp"

#include "adjacency_lemmas.hpp"
#include "graph6.hpp"

namespace critic {

namespace {

struct Best {
  bool have = false;
  Rational sum;
  njson detail;
};

}  // namespace

LemmaReport check_sigma_bounds(const Graph& g, const Rational& q, BoundMode mode) {
  LemmaReport rep;
  rep.lemma = mode == BoundMode::FanBound ? "fan_bound" : "broom_bound";
  rep.graph6 = to_graph6(g);
  rep.params["q"] = q.str();

  Rational delta(g.max_degree());
  if (q <= Rational(0) || q > delta - Rational(10)) {
    rep.verdict = Verdict::PremiseUnsatisfied;
    rep.params["note"] = "needs 0 < q <= max_degree - 10";
    return rep;
  }
  Rational dq = delta - q;  // positive given the gate above

  long long applicable = 0;
  njson violations = njson::array();
  bool have_tight = false;
  Rational tight_slack, tight_lhs, tight_rhs;
  njson tight_detail;

  auto consider = [&](const Rational& lhs, const Rational& rhs, njson detail) {
    detail["lhs"] = lhs.str();
    detail["rhs"] = rhs.str();
    if (lhs > rhs) {
      Rational slack = lhs - rhs;
      if (!have_tight || slack < tight_slack) {
        have_tight = true;
        tight_slack = slack;
        tight_lhs = lhs;
        tight_rhs = rhs;
        tight_detail = std::move(detail);
      }
    } else {
      violations.push_back(std::move(detail));
    }
  };

  if (mode == BoundMode::FanBound) {
    for (auto [u, v] : g.edges())
      for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
        Rational dx(g.degree(x));
        if (!(dx < delta / Rational(2))) continue;
        ++applicable;
        Rational rhs = Rational(2) * delta - dx - (Rational(6) * dx - Rational(8)) / dq -
                       Rational(8) * (dx - Rational(2)) / (dq * dq);
        Best best;
        long long syx = sigma_q(g, x, y, q);
        for (int z : g.neighbors(x)) {
          if (z == y) continue;
          Rational sum(syx + sigma_q(g, x, z, q));
          if (!best.have || sum > best.sum) {
            best.have = true;
            best.sum = sum;
            best.detail = njson{{"x", x}, {"y", y}, {"z", z}};
          }
        }
        if (!best.have) {
          // no candidate z at all: the existential claim fails outright
          njson d{{"x", x}, {"y", y}, {"z", nullptr}, {"lhs", "0/1"}, {"rhs", rhs.str()}};
          violations.push_back(std::move(d));
          continue;
        }
        consider(best.sum, rhs, std::move(best.detail));
      }
  } else {
    Rational min_deg(g.min_degree());
    if (min_deg < delta / Rational(2)) {
      rep.verdict = Verdict::PremiseUnsatisfied;
      rep.params["note"] = "needs min degree >= max_degree / 2";
      return rep;
    }
    for (auto [u, v] : g.edges())
      for (auto [x1, x2] : {std::pair{u, v}, std::pair{v, u}}) {
        Rational sum_deg(g.degree(x1) + g.degree(x2));
        if (!(sum_deg < Rational(3) * delta / Rational(2))) continue;
        ++applicable;
        Rational excess = sum_deg - delta;
        Rational rhs = Rational(3) * delta - sum_deg - (Rational(6) * excess - Rational(4)) / dq -
                       Rational(8) * (excess - Rational(2)) / (dq * dq);
        Best best;
        for (int z : g.neighbors(x1)) {
          if (z == x2) continue;
          long long s1 = sigma_q(g, x1, z, q);
          for (int y : g.neighbors(x2)) {
            if (y == x1 || y == z) continue;
            Rational sum(s1 + sigma_q(g, x2, y, q));
            if (!best.have || sum > best.sum) {
              best.have = true;
              best.sum = sum;
              best.detail = njson{{"x1", x1}, {"x2", x2}, {"z", z}, {"y", y}};
            }
          }
        }
        if (!best.have) {
          njson d{{"x1", x1}, {"x2", x2}, {"z", nullptr}, {"y", nullptr}, {"lhs", "0/1"}, {"rhs", rhs.str()}};
          violations.push_back(std::move(d));
          continue;
        }
        consider(best.sum, rhs, std::move(best.detail));
      }
  }

  rep.params["instances"] = applicable;
  if (applicable == 0) {
    rep.verdict = Verdict::PremiseUnsatisfied;
    rep.params["note"] = "no edge satisfies the degree premise";
    return rep;
  }
  if (!violations.empty()) {
    rep.verdict = Verdict::Violated;
    rep.witness = njson{{"violations", violations}};
    rep.lhs = violations[0]["lhs"].get<std::string>();
    rep.rhs = violations[0]["rhs"].get<std::string>();
  } else {
    rep.verdict = Verdict::Holds;
    rep.witness = njson{{"tightest", tight_detail}};
    rep.lhs = tight_lhs.str();
    rep.rhs = tight_rhs.str();
  }
  return rep;
}

}  // namespace critic
