#ifndef HAMOP_SPACE_HPP
#define HAMOP_SPACE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hamop/poly.hpp"

namespace hamop {

/// Derivative multi-index: count of derivatives per independent
/// variable, in declaration order.
using MultiIndex = std::vector<unsigned>;

unsigned mi_order(const MultiIndex& mi);

enum class AtomKind { IndepVar, Parameter, EvenJet, OddJet };

/// One coordinate of a jet space: an independent variable, a constant
/// parameter, or a derivative coordinate of an even or odd dependent
/// variable. index refers to the declaration list of the kind; mi is
/// empty unless kind is EvenJet or OddJet.
struct Atom {
  AtomKind kind;
  unsigned index = 0;
  MultiIndex mi;

  static Atom indep(unsigned i) { return {AtomKind::IndepVar, i, {}}; }
  static Atom param(unsigned i) { return {AtomKind::Parameter, i, {}}; }
  static Atom even_jet(unsigned i, MultiIndex m) {
    return {AtomKind::EvenJet, i, std::move(m)};
  }
  static Atom odd_jet(unsigned i, MultiIndex m) {
    return {AtomKind::OddJet, i, std::move(m)};
  }

  bool operator==(const Atom&) const = default;
  bool operator<(const Atom& o) const;
};

/// Declaration of a jet space with Grassmann coordinates: independent
/// variables, even dependent variables, odd dependent variables,
/// symbolic constants, and the truncation order of the jets.
struct SpaceSpec {
  std::vector<std::string> indep;
  std::vector<std::string> dep;
  std::vector<std::string> odd;
  std::vector<std::string> params;
  unsigned total_order = 1;

  bool operator==(const SpaceSpec&) const = default;
};

class Space;
using SpaceP = std::shared_ptr<const Space>;

/// Interned coordinate tables for a space declaration. Immutable after
/// construction; expressions hold a shared pointer to their space.
///
/// Multi-indices up to the truncation order are ranked in a fixed total
/// order (graded by derivative order, ties broken by more derivatives
/// on earlier-declared independent variables first). Even coordinates
/// get polynomial variable ids in the order: independent variables,
/// parameters, then jets of each dependent variable by rank. Odd jets
/// get their own id range ordered by (variable, rank); sorting odd ids
/// is the canonical order of Grassmann factors.
class Space : public std::enable_shared_from_this<Space> {
 public:
  static SpaceP make(SpaceSpec spec);

  const SpaceSpec& spec() const { return spec_; }
  unsigned n_indep() const { return (unsigned)spec_.indep.size(); }
  unsigned n_dep() const { return (unsigned)spec_.dep.size(); }
  unsigned n_odd() const { return (unsigned)spec_.odd.size(); }
  unsigned n_param() const { return (unsigned)spec_.params.size(); }
  unsigned total_order() const { return spec_.total_order; }

  /// Number of multi-indices with order <= total_order.
  unsigned n_ranks() const { return (unsigned)mindex_.size(); }
  const MultiIndex& mindex(unsigned rank) const { return mindex_[rank]; }
  std::optional<unsigned> rank(const MultiIndex& mi) const;
  /// Rank of mi with one more derivative on lambda; nullopt past the
  /// truncation order.
  std::optional<unsigned> shift_rank(unsigned rank, unsigned lambda) const;

  VarId even_id(const Atom& a) const;  // throws UnknownAtom
  Atom even_atom(VarId id) const;
  unsigned odd_id(unsigned odd_index, unsigned rank) const;
  unsigned odd_id(const Atom& a) const;  // throws UnknownAtom
  Atom odd_atom(unsigned id) const;
  unsigned odd_index_of(unsigned id) const { return id / n_ranks(); }
  unsigned odd_rank_of(unsigned id) const { return id % n_ranks(); }
  unsigned n_even_ids() const;
  unsigned n_odd_ids() const;

  std::string name(const Atom& a) const;
  std::string even_var_name(VarId id) const { return name(even_atom(id)); }

  /// All jet coordinates: even jets first, then odd jets, each block
  /// sorted by derivative order, then variable index, then rank.
  std::vector<Atom> enumerate_coords() const;

  bool same(const Space& o) const { return spec_ == o.spec_; }

 private:
  SpaceSpec spec_;
  std::vector<MultiIndex> mindex_;
  std::map<MultiIndex, unsigned> rank_of_;
  std::vector<std::optional<unsigned>> shift_;  // rank * m + lambda
  Space() = default;
};

/// Pointer-fast structural equality of the spaces behind two
/// expressions; throws SpaceMismatch when they differ.
void require_same_space(const SpaceP& a, const SpaceP& b);

}  // namespace hamop

#endif  // HAMOP_SPACE_HPP
