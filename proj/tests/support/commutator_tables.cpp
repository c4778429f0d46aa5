#include "commutator_tables.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "vcopy/casimir_gen.hpp"
#include "vcopy/catalog.hpp"

namespace oracle {

using namespace vcopy;

namespace {


// Commutator table of the enveloping algebra of QHa(N). Row syntax:
//   <left> | <right> = <terms>
// A term is a sign, optional Kronecker deltas d(ab), an optional integer and a
// product of generators; G_i is G with a free index i, J_ij a rotation.
// Six rows differ from the printed table (see kLiteralRows); those are given here
// in the form that holds in the algebra.
const char* kRows = R"(
J_ij | G_k Q_l = +d(jk) G_i Q_l -d(ik) G_j Q_l +d(jl) G_k Q_i -d(li) G_k Q_j
G_i Q_j | G_k = -d(jk) G_i T
J_ij | F_k P_l = +d(jk) F_i P_l -d(ik) F_j P_l +d(jl) F_k P_i -d(li) F_k P_j
G_i Q_j | F_k = -d(jk) G_i A +d(ik) Q_j R
J_ij | G_k F_l = +d(jk) G_i F_l -d(ik) G_j F_l +d(jl) G_k F_i -d(li) G_k F_j
G_i Q_j | Q_k = +d(ki) Q_j T
J_ij | P_k Q_l = +d(jk) P_i Q_l -d(ik) P_j Q_l +d(jl) P_k Q_i -d(li) P_k Q_j
G_i Q_j | P_k = +d(ik) Q_j M -d(kj) G_i L
J_ij | Q_k F_l = +d(jk) Q_i F_l -d(ik) Q_j F_l +d(jl) Q_k F_i -d(li) Q_k F_j
G_i Q_j | E = +P_i Q_j
J_ij | P_k G_l = +d(jk) P_i G_l -d(ik) P_j G_l +d(jl) P_k G_i -d(li) P_k G_j
F_i P_j | G_k = -d(jk) F_i M -d(ik) P_j R
G_i Q_j | G_k Q_l = +d(il) T G_k Q_j -d(kj) T G_i Q_l
F_i P_j | F_k = -d(kj) F_i T
G_i Q_j | F_k P_l = +d(ik) R Q_j P_l -d(lj) L G_i F_k +d(il) M F_k Q_j +d(ki)d(jl) R L -d(jk) A G_i P_l
F_i P_j | Q_k = +d(ik) P_j A +d(kj) F_i L
G_i Q_j | G_k F_l = +d(il) R G_k Q_j -d(jk) T G_i F_l -d(lj) A G_i G_k
F_i P_j | P_k = +d(ik) P_j T
G_i Q_j | P_k Q_l = +d(il) T P_k Q_j -d(jk) L G_i Q_l +d(ik) M Q_j Q_l
F_i P_j | E = -Q_i P_j
G_i Q_j | Q_k F_l = +d(ik) T Q_j F_l -d(jl) A G_i Q_k +d(ik)d(jl) T A +d(il) R Q_k Q_j
G_i F_j | G_k = -d(kj) G_i R
G_i Q_j | P_k G_l = +d(ik) M Q_j G_l -d(jk) L G_i G_l -d(lj) T G_i P_k +d(ki)d(lj) M T
G_i F_j | F_k = +d(ik) F_j R
F_i P_j | F_k P_l = +d(il) T F_k P_j -d(kj) T F_i P_l
G_i F_j | Q_k = +d(ik) F_j T +d(kj) G_i A
F_i P_j | G_k F_l = -d(jl) T F_i G_k -d(jk) M F_i F_l -d(ki) R P_j F_l -d(ki)d(lj) R T
G_i F_j | P_k = +d(jk) G_i T +d(ki) F_j M
F_i P_j | P_k Q_l = +d(jl) L F_i P_k +d(ik) T Q_l P_j +d(il) A P_j P_k
G_i F_j | E = +P_i F_j -G_i Q_j
F_i P_j | Q_k F_l = +d(kj) L F_i F_l -d(lj) T F_i Q_k +d(ki) A F_l P_j
P_i Q_j | G_k = -d(kj) P_i T -d(ki) Q_j M
F_i P_j | Q_k F_l = +d(kj) L F_i F_l -d(lj) T F_i Q_k +d(ik) A F_l P_j
P_i Q_j | F_k = -d(jk) P_i A -d(ik) Q_j T
F_i P_j | P_k G_l = +d(ki) T P_j G_l -d(lj) M P_k F_i -d(li) R P_k P_j
P_i Q_j | Q_k = +d(ik) Q_j L
G_i F_j | G_k F_l = +d(li) R G_k F_j -d(jk) R G_i F_l
P_i Q_j | P_k = -d(jk) P_i L
G_i F_j | P_k Q_l = +d(kj) T G_i Q_l +d(jl) A G_i P_k +d(ki) M Q_l F_j +d(il) T P_k F_j
Q_i F_j | G_k = -d(jk) Q_i R -d(ki) F_j T
G_i F_j | Q_k F_l = +d(kj) A G_i F_l +d(ki) T F_j F_l +d(il) R Q_k F_j
Q_i F_j | F_k = -d(ki) F_j A
G_i F_j | P_k G_l = +d(kj) T G_i G_l -d(lj) R G_i P_k +d(ki) M F_j G_l +d(ki)d(jl) M R
Q_i F_j | Q_k = +d(kj) Q_i A
P_i Q_j | P_k Q_l = +d(li) L P_k Q_j -d(kj) L P_i Q_l
Q_i F_j | P_k = +d(jk) Q_i T -d(ki) F_j L
P_i Q_j | Q_k F_l = +d(ki) L F_l Q_j -d(lj) A P_i Q_k -d(li) T Q_k Q_j
Q_i F_j | E = -Q_i Q_j
P_i Q_j | P_k G_l = -d(kj) L P_i G_l -d(lj) T P_i P_k -d(il) M P_k Q_j
P_i G_j | G_k = -d(ki) G_j M
Q_i F_j | Q_k F_l = +d(kj) A Q_i F_l -d(li) A Q_k F_j
P_i G_j | F_k = +d(kj) P_i R -d(ki) G_j T
Q_i F_j | P_k G_l = +d(kj) T Q_i G_l -d(ik) L F_j G_l -d(lj) R P_k Q_i -d(il) T P_k F_j
P_i G_j | Q_k = +d(kj) P_i T +d(ik) G_j L
P_i G_j | P_k G_l = +d(kj) M P_i G_l -d(il) M P_k G_j
P_i G_j | P_k = +d(jk) P_i M
P_i G_j | E = +P_i P_j
T T + R L | E = 0
T F_i P_j | E = -T Q_i P_j +L F_i P_j
T G_i Q_j | E = +T P_i Q_j +L G_i Q_j
R P_i Q_j | E = -2 T P_i Q_j
)";

// The six rows exactly as printed; each must fail for some index choice.
const char* kLiteralRows = R"(
G_i Q_j | F_k P_l = +d(ik) R Q_j P_l -d(lj) L G_i F_k +d(il) M F_k Q_j +d(ki)d(jl) R L
G_i Q_j | Q_k F_l = +d(ik) T Q_j F_l -d(jl) A G_i Q_k +d(ik)d(jl) T A
F_i P_j | G_k F_l = -d(jl) T F_i G_j -d(jk) M F_i F_l -d(kj) R P_j F_k -d(ki)d(lj) R T
P_i G_j | F_k = +d(ki) P_i R -d(ki) G_j T
Q_i F_j | P_k Q_l = +d(kj) T Q_i G_l -d(ik) L F_j G_l -d(lj) R P_k Q_i -d(il) T P_k F_j
T F_i P_j | E = +T Q_i P_j +L Q_i G_j
)";

Factor parse_factor(const std::string& tok) {
  auto us = tok.find('_');
  if (us == std::string::npos) return {tok, ""};
  return {tok.substr(0, us), tok.substr(us + 1)};
}

std::vector<Product> parse_side(const std::string& s) {
  std::vector<Product> out;
  std::istringstream in(s);
  Product cur;
  std::string tok;
  while (in >> tok) {
    if (tok == "+") {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(parse_factor(tok));
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Term> parse_rhs(const std::string& s) {
  std::vector<Term> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "0") continue;
    if (tok[0] == '+' || tok[0] == '-') {
      out.push_back(Term{tok[0] == '-' ? -1 : 1, {}, {}});
      tok = tok.substr(1);
    }
    while (tok.rfind("d(", 0) == 0) {
      out.back().deltas.emplace_back(tok[2], tok[3]);
      tok = tok.substr(5);
    }
    if (tok.empty()) continue;
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      out.back().coeff *= std::stoi(tok);
      continue;
    }
    out.back().factors.push_back(parse_factor(tok));
  }
  return out;
}

std::vector<Row> parse_rows(const char* text) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto bar = line.find('|');
    const auto eq = line.find('=');
    rows.push_back({line, parse_side(line.substr(0, bar)), parse_side(line.substr(bar + 1, eq - bar - 1)),
                    parse_rhs(line.substr(eq + 1))});
  }
  return rows;
}

}  // namespace

bool mentions_extension(const Product& p) {
  for (const auto& f : p)
    if (f.letter == "L" || f.letter == "A" || f.letter == "M") return true;
  return false;
}

namespace {

// Literal product; nullopt when a rotation J_ii appears.
std::optional<PbwElement> product(const AlgebraPtr& a, const Product& p, const std::map<char, int>& env, int N) {
  PbwElement e = PbwElement::unit(a);
  for (const auto& f : p) {
    if (f.letter == "J") {
      const int i = env.at(f.idx[0]), j = env.at(f.idx[1]);
      if (i == j) return std::nullopt;
      PbwElement J = PbwElement::generator(a, rotation_name(std::min(i, j), std::max(i, j), N));
      e = e * (i < j ? J : -J);
    } else {
      const std::string name = f.letter + (f.idx.empty() ? "" : std::to_string(env.at(f.idx[0])));
      e = e * PbwElement::generator(a, name);
    }
  }
  return e;
}

std::optional<PbwElement> side(const AlgebraPtr& a, const std::vector<Product>& s, const std::map<char, int>& env,
                               int N) {
  PbwElement sum(a);
  for (const auto& p : s) {
    auto e = product(a, p, env, N);
    if (!e) return std::nullopt;
    sum += *e;
  }
  return sum;
}

}  // namespace

int row_failures(const AlgebraPtr& a, int N, const Row& row, bool drop_extensions, int* checked) {
  std::set<char> letters;
  for (const auto* s : {&row.left, &row.right})
    for (const auto& p : *s)
      for (const auto& f : p)
        for (char c : f.idx) letters.insert(c);
  std::vector<char> vars(letters.begin(), letters.end());
  std::map<char, int> env;
  int bad = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos < vars.size()) {
      for (int v = 1; v <= N; ++v) {
        env[vars[pos]] = v;
        rec(pos + 1);
      }
      return;
    }
    auto lhs_a = side(a, row.left, env, N);
    auto lhs_b = side(a, row.right, env, N);
    if (!lhs_a || !lhs_b) return;
    PbwElement expected(a);
    for (const auto& t : row.rhs) {
      bool on = true;
      for (const auto& [x, y] : t.deltas)
        if (env.at(x) != env.at(y)) on = false;
      if (!on) continue;
      if (drop_extensions && mentions_extension(t.factors)) continue;
      expected += product(a, t.factors, env, N)->scaled(Rational(t.coeff));
    }
    if (checked) ++*checked;
    if (u_commutator(*lhs_a, *lhs_b) != expected) ++bad;
  };
  rec(0);
  return bad;
}

std::vector<Row> qha_rows() { return parse_rows(kRows); }
std::vector<Row> qha_printed_rows() { return parse_rows(kLiteralRows); }

bool left_mentions_extension(const Row& row) {
  for (const auto* s : {&row.left, &row.right})
    for (const auto& p : *s)
      if (mentions_extension(p)) return true;
  return false;
}

const std::vector<std::string>& boson_basis() {
  static const std::vector<std::string> basis = {"X11", "Xm11", "X1m1", "G1", "F1", "Q1", "P1", "R", "E", "T"};
  return basis;
}

const std::vector<std::vector<std::string>>& boson_table() {
  static const std::vector<std::vector<std::string>> table = {
    {"0", "-2*Xm11", "2*X1m1", "-G1", "F1", "-Q1", "P1", "0", "0", "0"},
    {"", "0", "4*X11", "0", "2*G1", "0", "2*Q1", "0", "0", "0"},
    {"", "", "0", "-2*F1", "0", "-2*P1", "0", "0", "0", "0"},
    {"", "", "", "0", "R", "0", "T", "0", "Q1", "0"},
    {"", "", "", "", "0", "-T", "0", "0", "P1", "0"},
    {"", "", "", "", "", "0", "a*R", "0", "a*G1", "0"},
    {"", "", "", "", "", "", "0", "0", "a*F1", "0"},
    {"", "", "", "", "", "", "", "0", "2*T", "0"},
    {"", "", "", "", "", "", "", "", "0", "-2*a*R"},
    {"", "", "", "", "", "", "", "", "", "0"},
  };
  return table;
}

int boson_table_failures(int alpha) {
  AlgebraPtr a = build({"boson_example", 0, Rational(alpha)}).algebra;
  const auto& basis = boson_basis();
  if (a->names() != basis) return 1;
  int bad = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      std::string entry = boson_table()[i][j];
      for (std::size_t p = entry.find('a'); p != std::string::npos; p = entry.find('a'))
        entry.replace(p, 1, std::to_string(alpha));
      if (u_commutator(PbwElement::generator(a, basis[i]), PbwElement::generator(a, basis[j])) !=
          parse_pbw(a, entry))
        ++bad;
    }
  return bad;
}

}  // namespace oracle
