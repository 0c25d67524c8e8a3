#include "hamop/space.hpp"

#include <algorithm>
#include <cctype>

#include "hamop/errors.hpp"

namespace hamop {

unsigned mi_order(const MultiIndex& mi) {
  unsigned o = 0;
  for (unsigned c : mi) o += c;
  return o;
}

bool Atom::operator<(const Atom& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (index != o.index) return index < o.index;
  return mi < o.mi;
}

namespace {

// Multi-indices of the given exact order, most derivatives on the
// earliest independent variable first.
void gen_mindices(unsigned m, unsigned pos, unsigned left, MultiIndex& cur,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == m) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned c = left + 1; c-- > 0;) {
    cur[pos] = c;
    gen_mindices(m, pos + 1, left - c, cur, out);
  }
}

void check_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw Error("invalid variable name '" + s + "'");
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)))
      throw Error("invalid variable name '" + s +
                  "': only letters and digits are allowed");
}

}  // namespace

SpaceP Space::make(SpaceSpec spec) {
  if (spec.indep.empty()) throw Error("space needs an independent variable");
  if (spec.total_order < 1) throw Error("total_order must be at least 1");
  std::vector<std::string> seen;
  for (const auto* list :
       {&spec.indep, &spec.dep, &spec.odd, &spec.params}) {
    for (const auto& s : *list) {
      check_name(s);
      if (std::find(seen.begin(), seen.end(), s) != seen.end())
        throw Error("duplicate variable name '" + s + "'");
      seen.push_back(s);
    }
  }
  auto sp = std::shared_ptr<Space>(new Space());
  sp->spec_ = std::move(spec);
  unsigned m = sp->n_indep();
  MultiIndex cur(m, 0);
  for (unsigned o = 0; o <= sp->total_order(); ++o)
    gen_mindices(m, 0, o, cur, sp->mindex_);
  for (unsigned r = 0; r < sp->mindex_.size(); ++r)
    sp->rank_of_[sp->mindex_[r]] = r;
  sp->shift_.resize(sp->mindex_.size() * m);
  for (unsigned r = 0; r < sp->mindex_.size(); ++r) {
    for (unsigned l = 0; l < m; ++l) {
      MultiIndex s = sp->mindex_[r];
      ++s[l];
      auto it = sp->rank_of_.find(s);
      sp->shift_[r * m + l] =
          it == sp->rank_of_.end() ? std::nullopt
                                   : std::optional<unsigned>(it->second);
    }
  }
  return sp;
}

std::optional<unsigned> Space::rank(const MultiIndex& mi) const {
  auto it = rank_of_.find(mi);
  if (it == rank_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<unsigned> Space::shift_rank(unsigned rank,
                                          unsigned lambda) const {
  return shift_[rank * n_indep() + lambda];
}

unsigned Space::n_even_ids() const {
  return n_indep() + n_param() + n_dep() * n_ranks();
}

unsigned Space::n_odd_ids() const { return n_odd() * n_ranks(); }

VarId Space::even_id(const Atom& a) const {
  switch (a.kind) {
    case AtomKind::IndepVar:
      if (a.index >= n_indep()) break;
      return a.index;
    case AtomKind::Parameter:
      if (a.index >= n_param()) break;
      return n_indep() + a.index;
    case AtomKind::EvenJet: {
      if (a.index >= n_dep()) break;
      auto r = rank(a.mi);
      if (!r) break;
      return n_indep() + n_param() + a.index * n_ranks() + *r;
    }
    case AtomKind::OddJet:
      throw UnknownAtom("odd coordinate used where an even one is required");
  }
  throw UnknownAtom("coordinate not declared in this space");
}

Atom Space::even_atom(VarId id) const {
  if (id < n_indep()) return Atom::indep(id);
  id -= n_indep();
  if (id < n_param()) return Atom::param(id);
  id -= n_param();
  unsigned dep = id / n_ranks();
  if (dep >= n_dep()) throw UnknownAtom("even coordinate id out of range");
  return Atom::even_jet(dep, mindex_[id % n_ranks()]);
}

unsigned Space::odd_id(unsigned odd_index, unsigned rank) const {
  return odd_index * n_ranks() + rank;
}

unsigned Space::odd_id(const Atom& a) const {
  if (a.kind != AtomKind::OddJet)
    throw UnknownAtom("even coordinate used where an odd one is required");
  if (a.index >= n_odd()) throw UnknownAtom("odd variable not declared");
  auto r = rank(a.mi);
  if (!r) throw UnknownAtom("derivative order outside the declared jet space");
  return odd_id(a.index, *r);
}

Atom Space::odd_atom(unsigned id) const {
  unsigned v = id / n_ranks();
  if (v >= n_odd()) throw UnknownAtom("odd coordinate id out of range");
  return Atom::odd_jet(v, mindex_[id % n_ranks()]);
}

std::string Space::name(const Atom& a) const {
  switch (a.kind) {
    case AtomKind::IndepVar:
      return spec_.indep.at(a.index);
    case AtomKind::Parameter:
      return spec_.params.at(a.index);
    case AtomKind::EvenJet:
    case AtomKind::OddJet: {
      const std::string& base = a.kind == AtomKind::EvenJet
                                    ? spec_.dep.at(a.index)
                                    : spec_.odd.at(a.index);
      if (mi_order(a.mi) == 0) return base;
      std::string s = base + "_";
      for (unsigned l = 0; l < a.mi.size(); ++l) {
        if (a.mi[l] == 0) continue;
        if (a.mi[l] > 1) s += std::to_string(a.mi[l]);
        s += spec_.indep[l];
      }
      return s;
    }
  }
  return {};
}

std::vector<Atom> Space::enumerate_coords() const {
  std::vector<Atom> out;
  out.reserve((n_dep() + n_odd()) * n_ranks());
  auto emit = [&](bool odd, unsigned nvars) {
    for (unsigned o = 0; o <= total_order(); ++o)
      for (unsigned v = 0; v < nvars; ++v)
        for (unsigned r = 0; r < n_ranks(); ++r) {
          if (mi_order(mindex_[r]) != o) continue;
          out.push_back(odd ? Atom::odd_jet(v, mindex_[r])
                            : Atom::even_jet(v, mindex_[r]));
        }
  };
  emit(false, n_dep());
  emit(true, n_odd());
  return out;
}

void require_same_space(const SpaceP& a, const SpaceP& b) {
  if (a == b) return;
  if (a && b && a->same(*b)) return;
  throw SpaceMismatch("expressions live on different spaces");
}

}  // namespace hamop
