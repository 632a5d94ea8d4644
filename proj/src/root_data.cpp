#include "crystals/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crystals {

// ---------------------------------------------------------------------------
// Weight / WeylWord

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (int& c : a.coords) c *= k;
  return a;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coords[k]);
  }
  return s + ")";
}

WeylWord WeylWord::tail() const {
  if (letters.empty()) throw std::logic_error("tail of empty word");
  return WeylWord(std::vector<int>(letters.begin() + 1, letters.end()));
}

std::string WeylWord::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(letters[k]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// CartanDatum

namespace {

std::vector<std::vector<int>> type_a(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

}  // namespace

CartanDatum CartanDatum::make(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  switch (family) {
    case 'A':
      if (rank >= 1 && rank <= 4) return {'A', type_a(rank), std::vector<int>(rank, 1)};
      break;
    case 'B':
      if (rank == 2) return {'B', {{2, -1}, {-2, 2}}, {2, 1}};
      if (rank == 3) return {'B', {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, {2, 2, 1}};
      break;
    case 'C':
      if (rank == 3) return {'C', {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, {1, 1, 2}};
      break;
    case 'D':
      if (rank == 4)
        return {'D', {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}, {1, 1, 1, 1}};
      break;
    case 'G':
      if (rank == 2) return {'G', {{2, -3}, {-1, 2}}, {1, 3}};
      break;
    default:
      break;
  }
  throw std::invalid_argument("unsupported Cartan type " + std::string(1, family) +
                              std::to_string(rank) + " (supported: A1-A4, B2, B3, C3, D4, G2)");
}

CartanDatum CartanDatum::parse(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw std::invalid_argument("malformed Cartan type '" + name + "'");
  int rank = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k])) || k > 3)
      throw std::invalid_argument("malformed Cartan type '" + name + "'");
    rank = rank * 10 + (name[k] - '0');
  }
  return make(name[0], rank);
}

CartanDatum::CartanDatum(char family, std::vector<std::vector<int>> cartan, std::vector<int> sym)
    : family_(family), rank_(static_cast<int>(cartan.size())), a_(std::move(cartan)), d_(std::move(sym)) {
  validate();
  build_roots();
}

void CartanDatum::check_index(int i) const {
  if (i < 1 || i > rank_)
    throw std::out_of_range("simple root index " + std::to_string(i) + " outside [1," +
                            std::to_string(rank_) + "]");
}

void CartanDatum::validate() const {
  const auto n = static_cast<std::size_t>(rank_);
  if (n == 0) throw std::invalid_argument("Cartan datum of rank 0");
  if (d_.size() != n) throw std::invalid_argument("symmetrizer length mismatch");
  for (const auto& row : a_)
    if (row.size() != n) throw std::invalid_argument("Cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i][i] != 2) throw std::invalid_argument("Cartan diagonal entry is not 2");
    if (d_[i] <= 0) throw std::invalid_argument("symmetrizer entry is not positive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
      if ((a_[i][j] == 0) != (a_[j][i] == 0)) throw std::invalid_argument("Cartan zero pattern is not symmetric");
      if (d_[i] * a_[i][j] != d_[j] * a_[j][i]) throw std::invalid_argument("symmetrizer does not symmetrize");
    }
  }
  // Finite type: every leading principal minor of (d_i a_ij) is positive.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(d_[i]) * a_[i][j];
  for (std::size_t k = 0; k < n; ++k) {
    // Pivots of elimination without row swaps are ratios of successive minors.
    if (m[k][k].sign() <= 0) throw std::invalid_argument("Cartan datum is not of finite type");
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
}

void CartanDatum::build_roots() {
  const auto n = static_cast<std::size_t>(rank_);
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    const std::vector<int> beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += a_[i][j] * beta[j];
      std::vector<int> img = beta;
      img[i] -= pairing;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos_roots_.push_back(r);
  std::sort(pos_roots_.begin(), pos_roots_.end(), [](const auto& x, const auto& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x < y;
  });
}

Weight CartanDatum::root_to_weight(std::span<const int> root_coords) const {
  if (root_coords.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("root rank mismatch");
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w.coords[i] += a_[i][j] * root_coords[j];
  return w;
}

long long CartanDatum::pair_root(std::span<const int> root_coords, const Weight& mu) const {
  if (root_coords.size() != static_cast<std::size_t>(rank_) || mu.rank() != rank_)
    throw std::invalid_argument("rank mismatch in pairing");
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<long long>(root_coords[j]) * d_[j] * mu.coords[j];
  return s;
}

// ---------------------------------------------------------------------------
// Reflections

Weight simple_root(const CartanDatum& datum, int i) {
  datum.check_index(i);
  Weight w = Weight::zero(datum.rank());
  for (int j = 1; j <= datum.rank(); ++j) w.coords[j - 1] = datum.cartan(j, i);
  return w;
}

Weight reflect(const CartanDatum& datum, int i, const Weight& mu) {
  datum.check_index(i);
  if (mu.rank() != datum.rank()) throw std::invalid_argument("weight rank mismatch");
  const int m = mu.at(i);
  Weight r = mu;
  for (int j = 1; j <= datum.rank(); ++j) r.coords[j - 1] -= m * datum.cartan(j, i);
  return r;
}

Weight act(const CartanDatum& datum, const WeylWord& word, const Weight& mu) {
  Weight r = mu;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) r = reflect(datum, *it, r);
  return r;
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(const CartanDatum& datum) : datum_(datum) {
  // Breadth-first by length, extending on the left: the lex-smallest reduced
  // word of x starts with its smallest left descent s, followed by the
  // lex-smallest word of s x.
  const Weight rho = datum.rho();
  words_.push_back(WeylWord{});
  by_image_.emplace(rho, 0);
  std::size_t layer_begin = 0;
  while (layer_begin < words_.size()) {
    const std::size_t layer_end = words_.size();
    std::map<Weight, WeylWord> next;
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      const Weight image = act(datum, words_[k], rho);
      for (int i = 1; i <= datum.rank(); ++i) {
        Weight img = reflect(datum, i, image);
        if (by_image_.count(img)) continue;
        std::vector<int> letters{i};
        letters.insert(letters.end(), words_[k].letters.begin(), words_[k].letters.end());
        WeylWord cand(std::move(letters));
        auto it = next.find(img);
        if (it == next.end())
          next.emplace(std::move(img), std::move(cand));
        else if (cand < it->second)
          it->second = std::move(cand);
      }
    }
    std::vector<std::pair<WeylWord, Weight>> layer;
    for (auto& [img, w] : next) layer.emplace_back(std::move(w), img);
    std::sort(layer.begin(), layer.end());
    for (auto& [w, img] : layer) {
      by_image_.emplace(img, words_.size());
      words_.push_back(std::move(w));
    }
    layer_begin = layer_end;
  }
}

const WeylWord& WeylGroup::canonical(const WeylWord& word) const {
  for (int l : word.letters) datum_.check_index(l);
  return words_.at(by_image_.at(act(datum_, word, datum_.rho())));
}

std::vector<WeylWord> WeylGroup::reduced_words(const WeylWord& word, std::size_t limit,
                                               bool* truncated) const {
  std::vector<WeylWord> out;
  bool cut = false;
  const Weight rho = datum_.rho();
  std::vector<int> prefix;
  // Peel off left descents: l(s_i x) < l(x) iff <h_i, x rho> < 0.
  auto rec = [&](auto&& self, const Weight& image) -> void {
    if (cut) return;
    if (image == rho) {
      if (out.size() == limit) {
        cut = true;
        return;
      }
      out.emplace_back(prefix);
      return;
    }
    for (int i = 1; i <= datum_.rank(); ++i) {
      if (image.at(i) >= 0) continue;
      prefix.push_back(i);
      self(self, reflect(datum_, i, image));
      prefix.pop_back();
    }
  };
  rec(rec, act(datum_, word, rho));
  if (truncated) *truncated = cut;
  return out;
}

std::vector<WeylWord> weyl_group(const CartanDatum& datum) { return WeylGroup(datum).elements(); }

WeylWord longest_word(const CartanDatum& datum) { return WeylGroup(datum).longest(); }

bool is_reduced(const CartanDatum& datum, const WeylWord& word) {
  Weight image = datum.rho();
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    datum.check_index(*it);
    if (image.at(*it) <= 0) return false;
    image = reflect(datum, *it, image);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dominance

std::vector<Rational> root_coordinates(const CartanDatum& datum, const Weight& weight) {
  const auto n = static_cast<std::size_t>(datum.rank());
  if (weight.coords.size() != n) throw std::invalid_argument("weight rank mismatch");
  // Augmented system A c = weight, A = Cartan matrix (rows i: <h_i, .>).
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = datum.matrix()[i][j];
    m[i][n] = weight.coords[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(m[k], m[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || m[r][k].is_zero()) continue;
      const Rational f = m[r][k] / m[k][k];
      for (std::size_t c = k; c <= n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  std::vector<Rational> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = m[k][n] / m[k][k];
  return c;
}

bool dominance_leq(const CartanDatum& datum, const Weight& mu, const Weight& lam) {
  const auto c = root_coordinates(datum, lam - mu);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer() && x.sign() >= 0; });
}

Weight dominant_conjugate(const CartanDatum& datum, Weight mu) {
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= datum.rank(); ++i)
      if (mu.at(i) < 0) {
        neg = i;
        break;
      }
    if (neg == 0) return mu;
    mu = reflect(datum, neg, mu);
  }
}

}  // namespace crystals
