#ifndef PTRLOGIC_EL_HPP
#define PTRLOGIC_EL_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ptrlogic/common.hpp"

namespace ptrlogic::el {

// Surface syntax, one statement per line, whitespace-separated tokens:
//
//   A <= B            atomic inclusion
//   A & B <= C        conjunction on the left
//   A <= EX R . B     existential on the right
//   EX R . A <= B     existential on the left
//   R <o= S           role inclusion
//   R o S <= T        role chain inclusion
//
// Every operator is a standalone token so serialized statements stay
// whitespace-tokenizable and every token is pointable.

inline constexpr const char* kSubsumes = "<=";
inline constexpr const char* kRoleSubsumes = "<o=";
inline constexpr const char* kAnd = "&";
inline constexpr const char* kExists = "EX";
inline constexpr const char* kRestrictionDot = ".";
inline constexpr const char* kCompose = "o";

bool is_reserved_token(std::string_view tok);
bool is_valid_symbol(std::string_view tok);

enum class Shape {
  Sub,             // C <= D
  SubConj,         // C1 & C2 <= D
  SubExistsRight,  // C <= EX R . D
  ExistsSubLeft,   // EX R . C <= D
  RoleSub,         // R1 <o= R
  RoleChain,       // R1 o R2 <= R
};

// One normal-form statement. Operand slots by shape:
//   Sub(a<=b)  SubConj(a&b<=c)  SubExistsRight(a<=EX b.c)
//   ExistsSubLeft(EX a.b<=c)  RoleSub(a<o=b)  RoleChain(a o b<=c)
struct ElAxiom {
  Shape shape = Shape::Sub;
  std::array<std::string, 3> ops;

  static ElAxiom sub(std::string c, std::string d);
  static ElAxiom sub_conj(std::string c1, std::string c2, std::string d);
  static ElAxiom sub_exists_right(std::string c, std::string r, std::string d);
  static ElAxiom exists_sub_left(std::string r, std::string c, std::string d);
  static ElAxiom role_sub(std::string r1, std::string r);
  static ElAxiom role_chain(std::string r1, std::string r2, std::string r);

  bool operator==(const ElAxiom& other) const = default;
};

struct ElAxiomHash {
  std::size_t operator()(const ElAxiom& ax) const;
};

std::string serialize_el_axiom(const ElAxiom& ax);
ElAxiom parse_el_axiom(const std::string& line);

// Strict total order over canonical serialization; fixes completion order.
bool canonical_less(const ElAxiom& a, const ElAxiom& b);

// Ordered statement sequence with a deduplicated set view. Duplicates stay
// in the ordered view but are collapsed everywhere set semantics apply.
class ElKb {
 public:
  ElKb() = default;
  explicit ElKb(std::vector<ElAxiom> axioms);

  void add(ElAxiom ax);
  const std::vector<ElAxiom>& axioms() const { return axioms_; }
  // First-occurrence order, duplicates removed.
  const std::vector<ElAxiom>& distinct() const { return distinct_; }
  bool contains(const ElAxiom& ax) const { return set_.count(ax) > 0; }
  std::size_t size() const { return axioms_.size(); }
  bool empty() const { return axioms_.empty(); }

 private:
  std::vector<ElAxiom> axioms_;
  std::vector<ElAxiom> distinct_;
  std::unordered_set<ElAxiom, ElAxiomHash> set_;
};

// `#` comment lines and blank lines are skipped.
ElKb parse_el_kb(const std::string& text);
ElKb load_el_kb(const std::string& path);
// One statement per line, duplicates serialized once.
std::string serialize_el_kb(const ElKb& kb);

// Distinct operand symbols in order of first occurrence.
std::vector<std::string> kb_symbol_table(const ElKb& kb);
std::vector<std::string> axiom_symbols(const ElAxiom& ax);

// Statements entailed but not present; canonically ordered.
using Completion = std::vector<ElAxiom>;

void sort_canonical(Completion& axioms);

}  // namespace ptrlogic::el

#endif
