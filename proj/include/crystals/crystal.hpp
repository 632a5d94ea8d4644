#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "crystals/check.hpp"
#include "crystals/rational.hpp"
#include "crystals/root_data.hpp"

namespace crystals {

/// Subset of a crystal, as a bitset over element ids.
using ElementSet = boost::dynamic_bitset<>;

/// Raised when a computation would exceed its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One linear piece of a path: the path moves by duration * direction.
struct Segment {
  Weight direction;
  Rational duration;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Piecewise-linear path pi : [0,1] -> P (x) Q starting at 0.
///
/// Kept in canonical form: durations positive and summing to 1, adjacent
/// directions distinct. For paths in B(lam) every direction is a Weyl
/// conjugate of lam, so directions stay integral and only the breakpoints
/// are rational.
class LSPath {
 public:
  LSPath() = default;
  /// Canonicalizes: drops zero-length pieces and merges equal neighbours.
  explicit LSPath(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segs_; }
  int rank() const { return segs_.empty() ? 0 : segs_.front().direction.rank(); }

  /// pi(1); throws if it is not integral.
  Weight endpoint() const;

  /// Values of <pi(t), h_i> at every breakpoint t_0 = 0, t_1, ..., t_n = 1.
  std::vector<Rational> heights(int i) const;

  /// Injective text encoding of the canonical form, used for identity and
  /// deterministic ordering: `(2,-1)*1/2;(0,1)*1/2`.
  std::string encode() const;

  friend bool operator==(const LSPath&, const LSPath&) = default;

 private:
  std::vector<Segment> segs_;
};

struct EpsPhi {
  int eps = 0;
  int phi = 0;
  friend bool operator==(const EpsPhi&, const EpsPhi&) = default;
};

/// The straight line to lam; represents the highest-weight element.
/// Throws std::invalid_argument unless lam is dominant.
LSPath straight_path(const CartanDatum& datum, const Weight& lam);

/// Root operators of the path model. nullopt stands for 0.
std::optional<LSPath> f_tilde(const CartanDatum& datum, int i, const LSPath& p);
std::optional<LSPath> e_tilde(const CartanDatum& datum, int i, const LSPath& p);

/// eps_i = -min h_i, phi_i = h_i(1) - min h_i, read off the height function.
EpsPhi eps_phi(const CartanDatum& datum, int i, const LSPath& p);

/// Same quantities by repeatedly applying e_tilde / f_tilde until 0.
EpsPhi eps_phi_by_iteration(const CartanDatum& datum, int i, const LSPath& p);

struct CrystalElement {
  LSPath path;
  Weight weight;
  std::vector<int> eps;  // indexed by i-1
  std::vector<int> phi;
};

struct GenerateOptions {
  std::size_t max_elements = 200'000;
  /// Recompute every eps/phi by operator iteration and throw
  /// std::logic_error on disagreement. Slow.
  bool verify_by_iteration = false;
};

/// The crystal B(lam) with its f- and e-edges.
///
/// Element ids follow breadth-first order from the highest-weight element
/// (id 0); elements at equal depth are ordered by LSPath::encode().
class CrystalGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  CrystalGraph(CartanDatum datum, Weight lam, std::vector<CrystalElement> elements,
               std::vector<std::size_t> f_edges, std::vector<std::size_t> e_edges);

  const CartanDatum& datum() const { return datum_; }
  const Weight& highest_weight() const { return lam_; }
  int rank() const { return datum_.rank(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<CrystalElement>& elements() const { return elements_; }
  const CrystalElement& element(std::size_t b) const { return elements_.at(b); }

  /// f_i b / e_i b, or npos for 0.
  std::size_t f(std::size_t b, int i) const { return f_[slot(b, i)]; }
  std::size_t e(std::size_t b, int i) const { return e_[slot(b, i)]; }
  int eps(std::size_t b, int i) const { return elements_[b].eps[static_cast<std::size_t>(i - 1)]; }
  int phi(std::size_t b, int i) const { return elements_[b].phi[static_cast<std::size_t>(i - 1)]; }

  std::size_t edge_count() const;

  /// Id of the element with this path, or npos.
  std::size_t find(const LSPath& p) const;

 private:
  std::size_t slot(std::size_t b, int i) const {
    datum_.check_index(i);
    return b * static_cast<std::size_t>(datum_.rank()) + static_cast<std::size_t>(i - 1);
  }

  CartanDatum datum_;
  Weight lam_;
  std::vector<CrystalElement> elements_;
  std::vector<std::size_t> f_;
  std::vector<std::size_t> e_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Closure of the straight path under all f_tilde. Throws ResourceError if
/// the Weyl dimension of lam exceeds opts.max_elements.
CrystalGraph generate_crystal(const CartanDatum& datum, const Weight& lam, const GenerateOptions& opts = {});

/// Normal-crystal relations on every element and edge:
///   <h_i, wt b> = phi_i(b) - eps_i(b)
///   eps_i(f_i b) = eps_i(b) + 1,  phi_i(f_i b) = phi_i(b) - 1,  e_i f_i b = b
///   eps_i(b) (resp. phi_i(b)) equals the number of e_i (f_i) steps in the graph
/// plus uniqueness of the highest-weight element.
Check verify_normal(const CrystalGraph& graph);

}  // namespace crystals
