#include "crystals/character.hpp"

#include <sstream>
#include <stdexcept>

#include "crystals/demazure.hpp"

namespace crystals {

FormalCharacter FormalCharacter::monomial(const Weight& mu, long long c) {
  FormalCharacter r;
  r.add(mu, c);
  return r;
}

long long FormalCharacter::mult(const Weight& mu) const {
  auto it = mult_.find(mu);
  return it == mult_.end() ? 0 : it->second;
}

void FormalCharacter::add(const Weight& mu, long long c) {
  if (c == 0) return;
  auto [it, inserted] = mult_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) mult_.erase(it);
  }
}

bool FormalCharacter::is_nonnegative() const {
  for (const auto& [mu, c] : mult_)
    if (c < 0) return false;
  return true;
}

long long FormalCharacter::total() const {
  long long s = 0;
  for (const auto& [mu, c] : mult_) s += c;
  return s;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  for (const auto& [mu, c] : o.mult_) add(mu, c);
  return *this;
}

std::string FormalCharacter::str() const {
  std::ostringstream os;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) os << it->first.str() << " : " << it->second << "\n";
  return os.str();
}

FormalCharacter char_of(const CrystalGraph& graph) {
  FormalCharacter chi;
  for (const auto& el : graph.elements()) chi.add(el.weight, 1);
  return chi;
}

FormalCharacter char_of(const ElementSet& subset, const CrystalGraph& graph) {
  if (subset.size() != graph.size()) throw std::invalid_argument("subset does not match crystal size");
  FormalCharacter chi;
  for (auto b = subset.find_first(); b != ElementSet::npos; b = subset.find_next(b))
    chi.add(graph.element(b).weight, 1);
  return chi;
}

FormalCharacter demazure_operator(const CartanDatum& datum, int i, const FormalCharacter& chi) {
  const Weight alpha = simple_root(datum, i);
  FormalCharacter out;
  for (const auto& [mu, c] : chi.terms()) {
    const int m = mu.at(i);
    if (m >= 0) {
      Weight nu = mu;
      for (int k = 0; k <= m; ++k, nu -= alpha) out.add(nu, c);
    } else if (m <= -2) {
      Weight nu = mu;
      for (int k = 1; k <= -m - 1; ++k) {
        nu += alpha;
        out.add(nu, -c);
      }
    }
  }
  return out;
}

FormalCharacter demazure_character(const CartanDatum& datum, const Weight& lam, const WeylWord& word) {
  FormalCharacter chi = FormalCharacter::monomial(lam);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) chi = demazure_operator(datum, *it, chi);
  return chi;
}

Check verify_demazure_character(const CrystalGraph& graph, const WeylWord& word) {
  const DemazureCrystal dc = demazure_crystal(graph, word);
  const FormalCharacter from_crystal = char_of(dc.members, graph);
  const FormalCharacter from_operators = demazure_character(graph.datum(), graph.highest_weight(), word);
  if (from_crystal == from_operators) return Check::pass();
  return Check::fail("word " + word.str() + ": crystal character\n" + from_crystal.str() +
                     "differs from Demazure operators\n" + from_operators.str());
}

FormalCharacter weyl_character(const CartanDatum& datum, const Weight& lam) {
  if (lam.rank() != datum.rank()) throw std::invalid_argument("weight length does not match rank");
  if (!lam.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
  const int n = datum.rank();
  const Weight rho = datum.rho();
  const auto& roots = datum.positive_roots();

  // Weights of V(lam) are exactly the nu with dominant conjugate <= lam;
  // every one is reached from lam by subtracting simple roots inside the set.
  // Breadth-first discovery order is by height of lam - nu, so every
  // nu + k alpha is settled before nu.
  struct Node {
    Weight weight;
    std::vector<int> depth;  // lam - weight in simple-root coordinates
  };
  std::vector<Node> order{{lam, std::vector<int>(static_cast<std::size_t>(n), 0)}};
  std::map<Weight, long long> mult;
  std::map<Weight, bool> seen{{lam, true}};
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int i = 1; i <= n; ++i) {
      Weight nu = order[k].weight - simple_root(datum, i);
      if (seen.count(nu)) continue;
      const bool inside = dominance_leq(datum, dominant_conjugate(datum, nu), lam);
      seen.emplace(nu, inside);
      if (!inside) continue;
      std::vector<int> depth = order[k].depth;
      ++depth[static_cast<std::size_t>(i - 1)];
      order.push_back({std::move(nu), std::move(depth)});
    }
  }
  mult[lam] = 1;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Weight& nu = order[k].weight;
    // (lam+rho, lam+rho) - (nu+rho, nu+rho) = (lam - nu, lam + nu + 2 rho)
    const long long denom = datum.pair_root(order[k].depth, lam + nu + 2 * rho);
    if (denom <= 0) throw std::logic_error("Freudenthal denominator is not positive at " + nu.str());
    long long numer = 0;
    for (const auto& alpha : roots) {
      const Weight step = datum.root_to_weight(alpha);
      Weight up = nu + step;
      for (;;) {
        auto it = mult.find(up);
        if (it == mult.end()) break;
        numer += 2 * datum.pair_root(alpha, up) * it->second;
        up += step;
      }
    }
    if (numer % denom != 0) throw std::logic_error("Freudenthal recursion is not integral at " + nu.str());
    if (numer != 0) mult[nu] = numer / denom;
  }

  FormalCharacter chi;
  for (const auto& [mu, c] : mult) chi.add(mu, c);
  return chi;
}

BigInt weyl_dimension(const CartanDatum& datum, const Weight& lam) {
  if (lam.rank() != datum.rank()) throw std::invalid_argument("weight length does not match rank");
  if (!lam.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
  const Weight rho = datum.rho();
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& alpha : datum.positive_roots()) {
    num *= datum.pair_root(alpha, lam + rho);
    den *= datum.pair_root(alpha, rho);
  }
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("Weyl dimension product is not integral");
  return q;
}

bool is_weyl_invariant(const CartanDatum& datum, const FormalCharacter& chi) {
  for (int i = 1; i <= datum.rank(); ++i)
    for (const auto& [mu, c] : chi.terms())
      if (chi.mult(reflect(datum, i, mu)) != c) return false;
  return true;
}

}  // namespace crystals
