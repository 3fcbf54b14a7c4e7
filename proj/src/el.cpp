#include "ptrlogic/el.hpp"

#include <algorithm>
#include <sstream>

namespace ptrlogic::el {

namespace {

const char* kReserved[] = {kSubsumes, kRoleSubsumes, kAnd,      kExists,
                           kRestrictionDot, kCompose,  ";",      "<eos>"};

void check_symbol(const std::string& tok) {
  if (!is_valid_symbol(tok))
    throw parse_error("invalid symbol name: '" + tok + "'");
}

}  // namespace

bool is_reserved_token(std::string_view tok) {
  for (const char* r : kReserved)
    if (tok == r) return true;
  return false;
}

bool is_valid_symbol(std::string_view tok) {
  if (tok.empty() || is_reserved_token(tok)) return false;
  if (tok.front() == '#') return false;
  for (char c : tok)
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

ElAxiom ElAxiom::sub(std::string c, std::string d) {
  check_symbol(c);
  check_symbol(d);
  return ElAxiom{Shape::Sub, {std::move(c), std::move(d), {}}};
}

ElAxiom ElAxiom::sub_conj(std::string c1, std::string c2, std::string d) {
  check_symbol(c1);
  check_symbol(c2);
  check_symbol(d);
  return ElAxiom{Shape::SubConj, {std::move(c1), std::move(c2), std::move(d)}};
}

ElAxiom ElAxiom::sub_exists_right(std::string c, std::string r, std::string d) {
  check_symbol(c);
  check_symbol(r);
  check_symbol(d);
  return ElAxiom{Shape::SubExistsRight, {std::move(c), std::move(r), std::move(d)}};
}

ElAxiom ElAxiom::exists_sub_left(std::string r, std::string c, std::string d) {
  check_symbol(r);
  check_symbol(c);
  check_symbol(d);
  return ElAxiom{Shape::ExistsSubLeft, {std::move(r), std::move(c), std::move(d)}};
}

ElAxiom ElAxiom::role_sub(std::string r1, std::string r) {
  check_symbol(r1);
  check_symbol(r);
  return ElAxiom{Shape::RoleSub, {std::move(r1), std::move(r), {}}};
}

ElAxiom ElAxiom::role_chain(std::string r1, std::string r2, std::string r) {
  check_symbol(r1);
  check_symbol(r2);
  return ElAxiom{Shape::RoleChain, {std::move(r1), std::move(r2), std::move(r)}};
}

std::size_t ElAxiomHash::operator()(const ElAxiom& ax) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(ax.shape);
  for (const auto& op : ax.ops) {
    h ^= fnv1a(op) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string serialize_el_axiom(const ElAxiom& ax) {
  const auto& o = ax.ops;
  switch (ax.shape) {
    case Shape::Sub:
      return o[0] + " <= " + o[1];
    case Shape::SubConj:
      return o[0] + " & " + o[1] + " <= " + o[2];
    case Shape::SubExistsRight:
      return o[0] + " <= EX " + o[1] + " . " + o[2];
    case Shape::ExistsSubLeft:
      return "EX " + o[0] + " . " + o[1] + " <= " + o[2];
    case Shape::RoleSub:
      return o[0] + " <o= " + o[1];
    case Shape::RoleChain:
      return o[0] + " o " + o[1] + " <= " + o[2];
  }
  throw std::logic_error("unreachable axiom shape");
}

namespace {

// Cursor over the line's token list; positions reported 1-based.
struct TokenCursor {
  const std::vector<std::string>& toks;
  std::size_t i = 0;

  bool done() const { return i >= toks.size(); }
  std::size_t pos() const { return i + 1; }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : toks[i];
  }
  std::string take_symbol(const char* what) {
    if (done())
      throw parse_error(std::string("expected ") + what + " at token " +
                            std::to_string(pos()) + ", got end of line",
                        pos());
    const std::string& t = toks[i];
    if (t == kExists || is_reserved_token(t))
      throw parse_error(std::string("expected ") + what + " at token " +
                            std::to_string(pos()) + ", got '" + t + "'",
                        pos());
    check_symbol(t);
    ++i;
    return t;
  }
  void take_exact(const char* tok) {
    if (done())
      throw parse_error(std::string("expected '") + tok + "' at token " +
                            std::to_string(pos()) + ", got end of line",
                        pos());
    if (toks[i] != tok)
      throw parse_error(std::string("expected '") + tok + "' at token " +
                            std::to_string(pos()) + ", got '" + toks[i] + "'",
                        pos());
    ++i;
  }
  void expect_end() {
    if (!done())
      throw parse_error("unexpected trailing token '" + toks[i] +
                            "' at token " + std::to_string(pos()),
                        pos());
  }
};

// EX SYMBOL . SYMBOL — used on either side of <=.
std::pair<std::string, std::string> parse_restriction(TokenCursor& cur) {
  cur.take_exact(kExists);
  std::string role = cur.take_symbol("role name");
  cur.take_exact(kRestrictionDot);
  if (!cur.done() && cur.peek() == kExists)
    throw normal_form_error("nested existential restriction at token " +
                                std::to_string(cur.pos()),
                            cur.pos());
  std::string filler = cur.take_symbol("concept name");
  return {role, filler};
}

}  // namespace

ElAxiom parse_el_axiom(const std::string& line) {
  std::vector<std::string> toks = split_ws(line);
  if (toks.empty()) throw parse_error("empty statement", 1);
  TokenCursor cur{toks};

  if (cur.peek() == kExists) {
    // EX R . C <= D
    auto [role, filler] = parse_restriction(cur);
    cur.take_exact(kSubsumes);
    if (!cur.done() && cur.peek() == kExists)
      throw normal_form_error(
          "existential restriction on both sides at token " +
              std::to_string(cur.pos()),
          cur.pos());
    std::string rhs = cur.take_symbol("concept name");
    cur.expect_end();
    return ElAxiom::exists_sub_left(role, filler, rhs);
  }

  std::string first = cur.take_symbol("symbol");
  if (cur.peek() == kAnd) {
    cur.take_exact(kAnd);
    std::string second = cur.take_symbol("concept name");
    if (!cur.done() && cur.peek() == kAnd)
      throw normal_form_error("conjunction of more than two concepts at token " +
                                  std::to_string(cur.pos()),
                              cur.pos());
    cur.take_exact(kSubsumes);
    if (!cur.done() && cur.peek() == kExists)
      throw normal_form_error(
          "conjunction with existential right-hand side at token " +
              std::to_string(cur.pos()),
          cur.pos());
    std::string rhs = cur.take_symbol("concept name");
    cur.expect_end();
    return ElAxiom::sub_conj(first, second, rhs);
  }
  if (cur.peek() == kCompose) {
    cur.take_exact(kCompose);
    std::string second = cur.take_symbol("role name");
    if (!cur.done() && cur.peek() == kCompose)
      throw normal_form_error("role chain of more than two roles at token " +
                                  std::to_string(cur.pos()),
                              cur.pos());
    cur.take_exact(kSubsumes);
    std::string rhs = cur.take_symbol("role name");
    cur.expect_end();
    return ElAxiom::role_chain(first, second, rhs);
  }
  if (cur.peek() == kRoleSubsumes) {
    cur.take_exact(kRoleSubsumes);
    std::string rhs = cur.take_symbol("role name");
    cur.expect_end();
    return ElAxiom::role_sub(first, rhs);
  }
  cur.take_exact(kSubsumes);
  if (!cur.done() && cur.peek() == kExists) {
    auto [role, filler] = parse_restriction(cur);
    cur.expect_end();
    return ElAxiom::sub_exists_right(first, role, filler);
  }
  std::string rhs = cur.take_symbol("concept name");
  cur.expect_end();
  return ElAxiom::sub(first, rhs);
}

bool canonical_less(const ElAxiom& a, const ElAxiom& b) {
  return serialize_el_axiom(a) < serialize_el_axiom(b);
}

ElKb::ElKb(std::vector<ElAxiom> axioms) {
  for (auto& ax : axioms) add(std::move(ax));
}

void ElKb::add(ElAxiom ax) {
  if (set_.insert(ax).second) distinct_.push_back(ax);
  axioms_.push_back(std::move(ax));
}

ElKb parse_el_kb(const std::string& text) {
  ElKb kb;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s.front() == '#') continue;
    try {
      kb.add(parse_el_axiom(s));
    } catch (const normal_form_error& e) {
      throw normal_form_error("line " + std::to_string(lineno) + ": " + e.what(),
                              e.token_pos);
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what(),
                        e.token_pos);
    }
  }
  return kb;
}

ElKb load_el_kb(const std::string& path) { return parse_el_kb(read_text_file(path)); }

std::string serialize_el_kb(const ElKb& kb) {
  std::string out;
  for (const auto& ax : kb.distinct()) {
    out += serialize_el_axiom(ax);
    out += '\n';
  }
  return out;
}

std::vector<std::string> axiom_symbols(const ElAxiom& ax) {
  std::vector<std::string> out;
  for (const auto& op : ax.ops)
    if (!op.empty()) out.push_back(op);
  return out;
}

std::vector<std::string> kb_symbol_table(const ElKb& kb) {
  std::vector<std::string> table;
  std::unordered_set<std::string> seen;
  for (const auto& ax : kb.axioms()) {
    for (auto& sym : axiom_symbols(ax)) {
      if (seen.insert(sym).second) table.push_back(std::move(sym));
    }
  }
  return table;
}

void sort_canonical(Completion& axioms) {
  std::sort(axioms.begin(), axioms.end(), canonical_less);
}

}  // namespace ptrlogic::el
