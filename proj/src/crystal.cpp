#include "crystals/crystal.hpp"

#include <algorithm>
#include <map>

#include "crystals/character.hpp"

namespace crystals {

// ---------------------------------------------------------------------------
// LSPath

LSPath::LSPath(std::vector<Segment> segments) {
  for (auto& s : segments) {
    if (s.duration.sign() < 0) throw std::invalid_argument("negative segment duration");
    if (s.duration.is_zero()) continue;
    if (!segs_.empty() && segs_.back().direction == s.direction)
      segs_.back().duration += s.duration;
    else
      segs_.push_back(std::move(s));
  }
}

Weight LSPath::endpoint() const {
  const int n = rank();
  std::vector<Rational> acc(static_cast<std::size_t>(n));
  for (const auto& s : segs_)
    for (int j = 0; j < n; ++j) acc[j] += s.duration * s.direction.coords[j];
  Weight w = Weight::zero(n);
  for (int j = 0; j < n; ++j) w.coords[j] = static_cast<int>(acc[j].to_integer());
  return w;
}

std::vector<Rational> LSPath::heights(int i) const {
  std::vector<Rational> h;
  h.reserve(segs_.size() + 1);
  h.emplace_back(0);
  for (const auto& s : segs_) h.push_back(h.back() + s.duration * s.direction.at(i));
  return h;
}

std::string LSPath::encode() const {
  std::string out;
  for (const auto& s : segs_) {
    if (!out.empty()) out += ';';
    out += s.direction.str();
    out += '*';
    out += s.duration.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Root operators

namespace {

struct HeightProfile {
  std::vector<Rational> h;
  std::int64_t min = 0;
};

HeightProfile profile(const CartanDatum& datum, int i, const LSPath& p) {
  datum.check_index(i);
  HeightProfile hp{p.heights(i), 0};
  const Rational m = *std::min_element(hp.h.begin(), hp.h.end());
  // Integrality of the minimum is what makes a path an LS path.
  if (!m.is_integer()) throw std::logic_error("path minimum is not integral: " + p.encode());
  hp.min = m.num();
  return hp;
}

}  // namespace

LSPath straight_path(const CartanDatum& datum, const Weight& lam) {
  if (lam.rank() != datum.rank()) throw std::invalid_argument("weight length does not match rank");
  if (!lam.is_dominant()) throw std::invalid_argument("highest weight " + lam.str() + " is not dominant");
  return LSPath({Segment{lam, Rational(1)}});
}

EpsPhi eps_phi(const CartanDatum& datum, int i, const LSPath& p) {
  const HeightProfile hp = profile(datum, i, p);
  return {static_cast<int>(-hp.min), static_cast<int>((hp.h.back() - hp.min).to_integer())};
}

std::optional<LSPath> f_tilde(const CartanDatum& datum, int i, const LSPath& p) {
  const HeightProfile hp = profile(datum, i, p);
  const auto& h = hp.h;
  const std::size_t n = p.segments().size();
  const Rational m(hp.min);
  if (h[n] - m < 1) return std::nullopt;

  // Last time the minimum is attained, then the first time after it that
  // the height reaches min + 1; reflect everything in between.
  std::size_t start = n;
  while (h[start] != m) --start;
  const Rational target = m + 1;
  std::size_t k = start;
  while (h[k + 1] < target) ++k;

  const auto& segs = p.segments();
  std::vector<Segment> out(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(start));
  for (std::size_t j = start; j < k; ++j) out.push_back({reflect(datum, i, segs[j].direction), segs[j].duration});
  const Rational tau = (target - h[k]) / segs[k].direction.at(i);
  out.push_back({reflect(datum, i, segs[k].direction), tau});
  out.push_back({segs[k].direction, segs[k].duration - tau});
  out.insert(out.end(), segs.begin() + static_cast<std::ptrdiff_t>(k + 1), segs.end());
  return LSPath(std::move(out));
}

std::optional<LSPath> e_tilde(const CartanDatum& datum, int i, const LSPath& p) {
  const HeightProfile hp = profile(datum, i, p);
  const auto& h = hp.h;
  const Rational m(hp.min);
  if (m > -1) return std::nullopt;

  // First time the minimum is attained, then the last time before it that
  // the height was min + 1; reflect everything in between.
  std::size_t stop = 0;
  while (h[stop] != m) ++stop;
  const Rational target = m + 1;
  std::size_t k = stop - 1;
  while (h[k] < target) --k;

  const auto& segs = p.segments();
  std::vector<Segment> out(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(k));
  const Rational tau = (target - h[k]) / segs[k].direction.at(i);
  out.push_back({segs[k].direction, tau});
  out.push_back({reflect(datum, i, segs[k].direction), segs[k].duration - tau});
  for (std::size_t j = k + 1; j < stop; ++j) out.push_back({reflect(datum, i, segs[j].direction), segs[j].duration});
  out.insert(out.end(), segs.begin() + static_cast<std::ptrdiff_t>(stop), segs.end());
  return LSPath(std::move(out));
}

EpsPhi eps_phi_by_iteration(const CartanDatum& datum, int i, const LSPath& p) {
  EpsPhi r;
  for (auto q = e_tilde(datum, i, p); q; q = e_tilde(datum, i, *q)) ++r.eps;
  for (auto q = f_tilde(datum, i, p); q; q = f_tilde(datum, i, *q)) ++r.phi;
  return r;
}

// ---------------------------------------------------------------------------
// CrystalGraph

CrystalGraph::CrystalGraph(CartanDatum datum, Weight lam, std::vector<CrystalElement> elements,
                           std::vector<std::size_t> f_edges, std::vector<std::size_t> e_edges)
    : datum_(std::move(datum)),
      lam_(std::move(lam)),
      elements_(std::move(elements)),
      f_(std::move(f_edges)),
      e_(std::move(e_edges)) {
  const std::size_t expect = elements_.size() * static_cast<std::size_t>(datum_.rank());
  if (f_.size() != expect || e_.size() != expect) throw std::invalid_argument("edge table size mismatch");
  index_.reserve(elements_.size());
  for (std::size_t b = 0; b < elements_.size(); ++b)
    if (!index_.emplace(elements_[b].path.encode(), b).second)
      throw std::invalid_argument("duplicate crystal element");
}

std::size_t CrystalGraph::edge_count() const {
  return static_cast<std::size_t>(std::count_if(f_.begin(), f_.end(), [](std::size_t t) { return t != npos; }));
}

std::size_t CrystalGraph::find(const LSPath& p) const {
  auto it = index_.find(p.encode());
  return it == index_.end() ? npos : it->second;
}

CrystalGraph generate_crystal(const CartanDatum& datum, const Weight& lam, const GenerateOptions& opts) {
  LSPath top = straight_path(datum, lam);
  const BigInt projected = weyl_dimension(datum, lam);
  if (projected > opts.max_elements)
    throw ResourceError("B" + lam.str() + " has " + projected.str() + " elements, cap is " +
                        std::to_string(opts.max_elements));

  const int n = datum.rank();
  const auto rank = static_cast<std::size_t>(n);
  std::vector<CrystalElement> elements;
  std::unordered_map<std::string, std::size_t> index;
  // Images f_i b recorded by encoding until the next level receives ids.
  std::vector<std::vector<std::string>> pending;

  auto make_element = [&](LSPath path) {
    CrystalElement el;
    el.weight = path.endpoint();
    el.eps.resize(rank);
    el.phi.resize(rank);
    for (int i = 1; i <= n; ++i) {
      const EpsPhi ep = eps_phi(datum, i, path);
      if (opts.verify_by_iteration && eps_phi_by_iteration(datum, i, path) != ep)
        throw std::logic_error("eps/phi mismatch between height function and iteration at " + path.encode());
      el.eps[i - 1] = ep.eps;
      el.phi[i - 1] = ep.phi;
    }
    el.path = std::move(path);
    return el;
  };

  index.emplace(top.encode(), 0);
  elements.push_back(make_element(std::move(top)));
  std::size_t level_begin = 0;
  while (level_begin < elements.size()) {
    const std::size_t level_end = elements.size();
    std::map<std::string, LSPath> next;  // ordered by encoding
    for (std::size_t b = level_begin; b < level_end; ++b) {
      std::vector<std::string> imgs(rank);
      for (int i = 1; i <= n; ++i) {
        if (elements[b].phi[i - 1] == 0) continue;
        auto img = f_tilde(datum, i, elements[b].path);
        if (!img) throw std::logic_error("f_tilde vanished where phi > 0");
        std::string key = img->encode();
        if (!index.count(key)) next.try_emplace(key, std::move(*img));
        imgs[i - 1] = std::move(key);
      }
      pending.push_back(std::move(imgs));
    }
    if (elements.size() + next.size() > opts.max_elements)
      throw ResourceError("crystal generation exceeded cap of " + std::to_string(opts.max_elements) + " elements");
    for (auto& [key, path] : next) {
      index.emplace(key, elements.size());
      elements.push_back(make_element(std::move(path)));
    }
    level_begin = level_end;
  }

  std::vector<std::size_t> f_edges(elements.size() * rank, CrystalGraph::npos);
  std::vector<std::size_t> e_edges(elements.size() * rank, CrystalGraph::npos);
  for (std::size_t b = 0; b < elements.size(); ++b) {
    for (std::size_t i = 0; i < rank; ++i) {
      if (!pending[b][i].empty()) f_edges[b * rank + i] = index.at(pending[b][i]);
      if (elements[b].eps[i] == 0) continue;
      auto img = e_tilde(datum, static_cast<int>(i + 1), elements[b].path);
      auto it = img ? index.find(img->encode()) : index.end();
      if (it == index.end()) throw std::logic_error("e_tilde leaves the generated crystal");
      e_edges[b * rank + i] = it->second;
    }
  }
  return CrystalGraph(datum, lam, std::move(elements), std::move(f_edges), std::move(e_edges));
}

Check verify_normal(const CrystalGraph& g) {
  const int n = g.rank();
  std::size_t tops = 0;
  for (std::size_t b = 0; b < g.size(); ++b) {
    const auto& el = g.element(b);
    bool is_top = true;
    for (int i = 1; i <= n; ++i) {
      const std::string at = "element " + std::to_string(b) + ", i=" + std::to_string(i) + ": ";
      if (el.weight.at(i) != g.phi(b, i) - g.eps(b, i))
        return Check::fail(at + "w_i != phi_i - eps_i");
      if (g.e(b, i) != CrystalGraph::npos) is_top = false;
      if ((g.e(b, i) == CrystalGraph::npos) != (g.eps(b, i) == 0))
        return Check::fail(at + "e_i defined iff eps_i > 0 fails");
      if ((g.f(b, i) == CrystalGraph::npos) != (g.phi(b, i) == 0))
        return Check::fail(at + "f_i defined iff phi_i > 0 fails");
      if (const std::size_t c = g.f(b, i); c != CrystalGraph::npos) {
        if (g.eps(c, i) != g.eps(b, i) + 1) return Check::fail(at + "eps_i(f_i b) != eps_i(b) + 1");
        if (g.phi(c, i) != g.phi(b, i) - 1) return Check::fail(at + "phi_i(f_i b) != phi_i(b) - 1");
        if (g.e(c, i) != b) return Check::fail(at + "e_i f_i b != b");
        if (g.element(c).weight != el.weight - simple_root(g.datum(), i))
          return Check::fail(at + "f_i does not lower the weight by alpha_i");
      }
      int up = 0;
      for (std::size_t c = g.e(b, i); c != CrystalGraph::npos; c = g.e(c, i)) ++up;
      int down = 0;
      for (std::size_t c = g.f(b, i); c != CrystalGraph::npos; c = g.f(c, i)) ++down;
      if (up != g.eps(b, i) || down != g.phi(b, i))
        return Check::fail(at + "eps/phi disagree with string walk in the graph");
    }
    if (is_top) {
      ++tops;
      if (el.weight != g.highest_weight()) return Check::fail("highest-weight element has wrong weight");
    }
  }
  if (tops != 1) return Check::fail(std::to_string(tops) + " highest-weight elements");
  return Check::pass();
}

}  // namespace crystals
