#include "skeldet/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "skeldet/exact_linalg.hpp"

namespace skeldet {

Exponent to_exponent(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<Exponent>::max()) {
    throw std::overflow_error("exponent out of range: " + to_string(value));
  }
  return static_cast<Exponent>(value.get_ui());
}

Monomial Monomial::power(std::size_t nvars, std::size_t var, Exponent e) {
  if (var >= nvars) {
    throw std::out_of_range("variable index " + std::to_string(var) + " outside ring of " +
                            std::to_string(nvars) + " variables");
  }
  Monomial m(nvars);
  m.exponents_[var] = e;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exponents_) {
    d += e;
  }
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::quotient_by_gcd(const Monomial& m) const {
  Monomial out(nvars());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = exponents_[i] > m.exponents_[i] ? exponents_[i] - m.exponents_[i] : 0;
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(nvars());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    out.exponents_[i] = a.exponents_[i] + b.exponents_[i];
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const Monomial& m) {
  if (m.is_one()) {
    return out << "1";
  }
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) {
      continue;
    }
    if (!first) {
      out << '*';
    }
    first = false;
    out << "x" << (i + 1);
    if (m[i] > 1) {
      out << '^' << m[i];
    }
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  std::vector<Monomial> kept;
  for (auto& g : generators) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) {
      kept.push_back(std::move(g));
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  if (nvars == 0) {
    throw std::invalid_argument("monomial ideal needs at least one variable");
  }
  for (const auto& g : generators) {
    if (g.nvars() != nvars) {
      throw std::invalid_argument("generator has " + std::to_string(g.nvars()) +
                                  " variables, ring has " + std::to_string(nvars));
    }
  }
  generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {Monomial(nvars)});
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_) {
    throw std::invalid_argument("monomial and ideal live in different rings");
  }
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("comparing ideals in rings of different sizes");
  }
  return a == b;
}

Monomial parking_generator(const Multigraph& g, const VertexSet& a) {
  std::vector<Exponent> exps(g.n(), 0);
  for (std::size_t i : a.members()) {
    exps[i - 1] = to_exponent(outside_degree(g, a, i));
  }
  return Monomial(std::move(exps));
}

std::vector<Monomial> skeleton_generators(const Multigraph& g, std::size_t k) {
  const std::size_t n = g.n();
  if (k > n - 1) {
    throw std::invalid_argument("skeleton index k=" + std::to_string(k) + " outside [0, " +
                                std::to_string(n - 1) + "]");
  }
  if (n > 30) {
    throw std::invalid_argument("skeleton ideals support at most 30 non-root vertices");
  }
  std::vector<Monomial> gens;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) <= k + 1) {
      gens.push_back(parking_generator(g, VertexSet::from_mask(mask, n)));
    }
  }
  return gens;
}

MonomialIdeal skeleton_ideal(const Multigraph& g, std::size_t k) {
  return MonomialIdeal(g.n(), skeleton_generators(g, k));
}

MonomialIdeal parking_ideal(const Multigraph& g) { return skeleton_ideal(g, g.n() - 1); }

MonomialIdeal lambda_ideal(const LambdaSeq& lambda) {
  const std::size_t n = lambda.size();
  if (n > 30) {
    throw std::invalid_argument("lambda ideals support at most 30 variables");
  }
  std::vector<Monomial> gens;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const Exponent e = lambda.at(static_cast<std::size_t>(std::popcount(mask)));
    std::vector<Exponent> exps(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        exps[i] = e;
      }
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(n, std::move(gens));
}

WeightFunction::WeightFunction(std::size_t n_, std::size_t r_, Exponent a_)
    : n(n_), r(r_), a(a_) {
  if (n < 1) {
    throw std::invalid_argument("weight function needs n >= 1");
  }
  if (r > n) {
    throw std::invalid_argument("weight function needs 0 <= r <= n");
  }
  if (a < 1 || (r >= 1 && a < 2)) {
    throw std::invalid_argument("weight function needs a >= 2 (a >= 1 when r = 0)");
  }
}

MonomialIdeal weight_ideal(const WeightFunction& w) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < w.n; ++i) {
    gens.push_back(Monomial::power(w.n, i, w(i)));
    for (std::size_t j = 0; j < w.n; ++j) {
      if (i == j) {
        continue;
      }
      std::vector<Exponent> exps(w.n, 0);
      exps[i] = w(i) - 1;
      exps[j] = w(j) - 1;
      gens.emplace_back(std::move(exps));
    }
  }
  return MonomialIdeal(w.n, std::move(gens));
}

MonomialIdeal weight_ideal(std::size_t n, std::size_t r, Exponent a) {
  return weight_ideal(WeightFunction(n, r, a));
}

MonomialIdeal matrix_ideal(const IntegerMatrix& h) {
  if (h.order() == 0 || !in_class_gn(h)) {
    throw std::invalid_argument("matrix_ideal: matrix is not in the class G_n");
  }
  const std::size_t n = h.order();
  std::vector<Monomial> gens;
  for (std::size_t l = 0; l < n; ++l) {
    gens.push_back(Monomial::power(n, l, to_exponent(h(l, l))));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Exponent> exps(n, 0);
      exps[i] = to_exponent(h(i, i) - h(i, j));
      exps[j] = to_exponent(h(j, j) - h(i, j));
      gens.emplace_back(std::move(exps));
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.nvars() != ideal.nvars()) {
    throw std::invalid_argument("colon: monomial and ideal live in different rings");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    gens.push_back(g.quotient_by_gcd(m));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal adjoin_power(const MonomialIdeal& ideal, std::size_t var, Exponent e) {
  std::vector<Monomial> gens = ideal.generators();
  gens.push_back(Monomial::power(ideal.nvars(), var, e));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

void write_ideal(std::ostream& out, const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      out << (i ? " " : "") << g[i];
    }
    out << '\n';
  }
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  auto gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) {
    auto row = nlohmann::json::array();
    for (Exponent e : g.exponents()) {
      row.push_back(std::to_string(e));
    }
    gens.push_back(std::move(row));
  }
  return {{"nvars", ideal.nvars()}, {"generators", std::move(gens)}};
}

}  // namespace skeldet
