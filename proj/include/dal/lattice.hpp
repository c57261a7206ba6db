#ifndef DAL_LATTICE_HPP_
#define DAL_LATTICE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dal/error.hpp"

namespace dal {

using Elem = std::uint32_t;
using ElemSet = std::set<Elem>;
using Partition = std::vector<std::vector<Elem>>;

enum class LatticeKind { BDL, Heyting, Boolean };

std::string to_string(LatticeKind k);

// A finite bounded distributive lattice, optionally with a relative
// pseudo-complement. Two representations: dense operation tables, or the
// powerset of up to 16 atoms with elements as bitmasks.
class FiniteLattice {
 public:
  static FiniteLattice from_tables(std::size_t size, std::vector<Elem> join, std::vector<Elem> meet, Elem bot,
                                   Elem top, std::vector<std::string> names = {},
                                   std::optional<std::vector<Elem>> impl = std::nullopt);
  static FiniteLattice powerset(std::vector<std::string> atom_names);

  std::size_t size() const { return size_; }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }

  Elem join(Elem a, Elem b) const { return powerset_ ? (a | b) : join_[a * size_ + b]; }
  Elem meet(Elem a, Elem b) const { return powerset_ ? (a & b) : meet_[a * size_ + b]; }
  Elem impl(Elem a, Elem b) const;
  Elem complement(Elem a) const { return impl(a, bot_); }
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }

  bool has_implication() const { return powerset_ || !impl_.empty(); }
  LatticeKind kind() const { return kind_; }
  bool is_boolean() const { return kind_ == LatticeKind::Boolean; }
  bool is_heyting() const { return kind_ != LatticeKind::BDL; }
  bool is_powerset() const { return powerset_; }
  const std::vector<std::string>& atom_names() const { return atom_names_; }

  std::string name(Elem x) const;
  // Accepts names as printed by name(), plus "bot"/"top".
  std::optional<Elem> find(const std::string& name) const;

  // Generator images for free algebras ("a" -> element); empty otherwise.
  const std::map<std::string, Elem>& generators() const { return generators_; }
  // Short construction recipe used by the algebra file format.
  const std::string& descriptor() const { return descriptor_; }

  std::vector<Elem> atoms() const;              // covers of bot
  std::vector<Elem> join_irreducibles() const;  // exactly one lower cover
  std::vector<std::pair<Elem, Elem>> covers() const;

  // Implication computed as the largest c with a*c <= b (requires distributivity).
  FiniteLattice with_computed_implication() const;

  // Canonical table view: join/meet/impl tables (impl empty without implication).
  std::vector<Elem> join_table() const;
  std::vector<Elem> meet_table() const;
  std::vector<Elem> impl_table() const;

  FiniteLattice with_descriptor(std::string d, std::map<std::string, Elem> gens = {}) const;

 private:
  FiniteLattice() = default;
  void classify();

  std::size_t size_ = 1;
  Elem bot_ = 0, top_ = 0;
  bool powerset_ = false;
  std::vector<std::string> atom_names_;
  std::vector<Elem> join_, meet_, impl_;
  std::vector<std::string> names_;
  std::map<std::string, Elem> generators_;
  std::string descriptor_;
  LatticeKind kind_ = LatticeKind::BDL;
};

FiniteLattice powerset_algebra(const std::vector<std::string>& atom_names);
// 2^n atoms; generator i maps to the set of atoms whose i-th coordinate is positive.
FiniteLattice free_boolean(const std::vector<std::string>& generators);
// Downsets of the strict order generated by `less` (pairs of indices into `points`).
FiniteLattice downset_algebra(const std::vector<std::string>& points,
                              const std::vector<std::pair<std::size_t, std::size_t>>& less);
FiniteLattice chain(std::size_t n);

struct LawViolation {
  std::string law;  // "L1".."L12", "residuation", "H1", "H2", "H3", "LEM", "implication"
  std::vector<Elem> witness;
};

std::vector<LawViolation> validate(const FiniteLattice& l, LatticeKind kind);

bool is_ideal(const FiniteLattice& l, const ElemSet& s);
ElemSet principal_ideal(const FiniteLattice& l, Elem x);

class NotACongruence : public Error {
 public:
  NotACongruence(const std::string& what, Elem x, Elem y) : Error(what), x_(x), y_(y) {}
  std::pair<Elem, Elem> witness() const { return {x_, y_}; }

 private:
  Elem x_, y_;
};

bool is_congruence(const FiniteLattice& l, const Partition& classes);
// Quotient algebra with class k as element k. Throws NotACongruence.
FiniteLattice quotient(const FiniteLattice& l, const Partition& classes);
// Index of the class containing each element.
std::vector<Elem> class_map(const FiniteLattice& l, const Partition& classes);

ElemSet generated_sublattice(const FiniteLattice& l, const ElemSet& gens, LatticeKind kind);

// Downset algebras of all posets with 1..max_points points, up to isomorphism.
std::vector<FiniteLattice> heyting_catalog(std::size_t max_points);
// Every finite distributive lattice with 2..max_size elements, up to
// isomorphism, ordered like heyting_catalog.
std::vector<FiniteLattice> heyting_algebras_up_to(std::size_t max_size);

// Structure-preserving bijection for join, meet, bot and top, if one exists.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);
inline bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace dal

#endif  // DAL_LATTICE_HPP_
