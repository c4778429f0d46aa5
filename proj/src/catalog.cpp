#include "vcopy/catalog.hpp"

#include <map>
#include <memory>
#include <set>

#include "vcopy/casimir_gen.hpp"
#include "vcopy/errors.hpp"

namespace vcopy {

namespace {

class Builder {
 public:
  void gen(const std::string& name, bool levi = false, std::string latex = {}) {
    index_.emplace(name, static_cast<GenIndex>(names_.size()));
    names_.push_back(name);
    latex_.push_back(latex.empty() ? default_latex_name(name) : std::move(latex));
    if (levi) levi_.push_back(static_cast<GenIndex>(names_.size() - 1));
  }

  // [a, b] += c * target
  void br(const std::string& a, const std::string& b, const std::string& target, const Rational& c) {
    if (c == 0) return;
    GenIndex i = index_.at(a), j = index_.at(b), k = index_.at(target);
    if (i > j) {
      std::swap(i, j);
      table_[{i, j}][k] -= c;
    } else {
      table_[{i, j}][k] += c;
    }
  }

  AlgebraPtr build() const {
    std::vector<BracketSpec> specs;
    for (const auto& [key, terms] : table_) {
      BracketSpec b{key.first, key.second, {}};
      for (const auto& [k, c] : terms)
        if (c != 0) b.terms.emplace(k, c);
      specs.push_back(std::move(b));
    }
    return std::make_shared<const LieAlgebra>(names_, specs, levi_, latex_);
  }

 private:
  std::vector<std::string> names_, latex_;
  std::map<std::string, GenIndex> index_;
  std::map<std::pair<GenIndex, GenIndex>, std::map<GenIndex, Rational>> table_;
  std::vector<GenIndex> levi_;
};

int delta(int a, int b) { return a == b ? 1 : 0; }

// J_ab for arbitrary a != b as (name, sign).
std::pair<std::string, int> rot(int a, int b, int N) {
  return a < b ? std::pair{rotation_name(a, b, N), 1} : std::pair{rotation_name(b, a, N), -1};
}

void add_so(Builder& B, int N) {
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) B.gen(rotation_name(i, j, N), true);
  // [J_ij, J_kl] = d_il J_jk + d_jk J_il - d_jl J_ik - d_ik J_jl
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l) {
          if (std::pair{i, j} >= std::pair{k, l}) continue;
          const std::pair<int, std::pair<int, int>> parts[] = {
              {delta(i, l), {j, k}}, {delta(j, k), {i, l}}, {-delta(j, l), {i, k}}, {-delta(i, k), {j, l}}};
          for (const auto& [c, ab] : parts) {
            if (c == 0 || ab.first == ab.second) continue;
            auto [name, s] = rot(ab.first, ab.second, N);
            B.br(rotation_name(i, j, N), rotation_name(k, l, N), name, c * s);
          }
        }
}

// Vector representation: [J_ij, V_k] = -d_ik V_j + d_kj V_i.
void add_vector(Builder& B, int N, const std::string& V) {
  for (int k = 1; k <= N; ++k) B.gen(V + std::to_string(k));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k) {
        const std::string J = rotation_name(i, j, N);
        if (i == k) B.br(J, V + std::to_string(k), V + std::to_string(j), -1);
        if (k == j) B.br(J, V + std::to_string(k), V + std::to_string(i), 1);
      }
}

std::string num(int k) { return std::to_string(k); }

// Hamilton families: kind 0 = Ha, 1 = IHa with the central extensions listed in ext.
AlgebraPtr hamilton(int N, bool inhomogeneous, const std::string& ext) {
  Builder B;
  add_so(B, N);
  add_vector(B, N, "G");
  add_vector(B, N, "F");
  if (inhomogeneous) {
    add_vector(B, N, "Q");
    add_vector(B, N, "P");
  }
  B.gen("R");
  if (inhomogeneous) {
    B.gen("E");
    B.gen("T");
  }
  for (char x : std::string("LAM"))
    if (ext.find(x) != std::string::npos) B.gen(std::string(1, x));
  const bool L = ext.find('L') != std::string::npos;
  const bool A = ext.find('A') != std::string::npos;
  const bool M = ext.find('M') != std::string::npos;
  for (int i = 1; i <= N; ++i) {
    B.br("G" + num(i), "F" + num(i), "R", 1);
    if (!inhomogeneous) continue;
    B.br("G" + num(i), "Q" + num(i), "T", 1);
    B.br("F" + num(i), "P" + num(i), "T", 1);
    B.br("E", "G" + num(i), "P" + num(i), -1);
    B.br("E", "F" + num(i), "Q" + num(i), 1);
    if (L) B.br("P" + num(i), "Q" + num(i), "L", 1);
    if (M) B.br("G" + num(i), "P" + num(i), "M", 1);
    if (A) B.br("F" + num(i), "Q" + num(i), "A", 1);
  }
  if (inhomogeneous) B.br("E", "R", "T", 2);
  if (L) B.br("E", "T", "L", -1);
  return B.build();
}

// V_i W_j - V_j W_i
std::string antisym(const std::string& V, const std::string& W, int i, int j) {
  return V + num(i) + "*" + W + num(j) + " - " + V + num(j) + "*" + W + num(i);
}

VirtualCopySpec hamilton_spec(const AlgebraPtr& alg, int N, bool inhomogeneous, const std::string& ext) {
  const bool L = ext.find('L') != std::string::npos;
  const bool A = ext.find('A') != std::string::npos;
  const bool M = ext.find('M') != std::string::npos;
  std::string f;
  if (!inhomogeneous) {
    f = "R";
  } else {
    f = "T^2";
    if (L) f += " + R*L";
    if (A && M) f += " - A*M";
  }
  std::map<std::string, std::string> P;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      std::string p;
      if (!inhomogeneous) {
        p = antisym("G", "F", i, j);
      } else {
        p = "T*(" + antisym("G", "Q", i, j) + ") + T*(" + antisym("F", "P", i, j) + ") + R*(" +
            antisym("P", "Q", i, j) + ")";
        if (L) p += " + L*(" + antisym("G", "F", i, j) + ")";
        if (M) p += " + M*(" + antisym("Q", "F", i, j) + ")";
        if (A) p += " + A*(" + antisym("P", "G", i, j) + ")";
      }
      P.emplace(rotation_name(i, j, N), p);
    }
  return make_spec(alg, f, P);
}

AlgebraPtr boson_algebra(const Rational& alpha) {
  Builder B;
  B.gen("X11", true, "X_{1,1}");
  B.gen("Xm11", true, "X_{-1,1}");
  B.gen("X1m1", true, "X_{1,-1}");
  for (const char* g : {"G1", "F1", "Q1", "P1", "R", "E", "T"}) B.gen(g);
  B.br("X11", "Xm11", "Xm11", -2);
  B.br("X11", "X1m1", "X1m1", 2);
  B.br("X11", "G1", "G1", -1);
  B.br("X11", "F1", "F1", 1);
  B.br("X11", "Q1", "Q1", -1);
  B.br("X11", "P1", "P1", 1);
  B.br("Xm11", "X1m1", "X11", 4);
  B.br("Xm11", "F1", "G1", 2);
  B.br("Xm11", "P1", "Q1", 2);
  B.br("X1m1", "G1", "F1", -2);
  B.br("X1m1", "Q1", "P1", -2);
  B.br("G1", "F1", "R", 1);
  B.br("G1", "P1", "T", 1);
  B.br("G1", "E", "Q1", 1);
  B.br("F1", "Q1", "T", -1);
  B.br("F1", "E", "P1", 1);
  B.br("Q1", "P1", "R", alpha);
  B.br("Q1", "E", "G1", alpha);
  B.br("P1", "E", "F1", alpha);
  B.br("R", "E", "T", 2);
  B.br("E", "T", "R", -2 * alpha);
  return B.build();
}

AlgebraPtr su11_algebra() {
  Builder B;
  B.gen("X11", true, "X_{1,1}");
  B.gen("Xm11", true, "X_{-1,1}");
  B.gen("X1m1", true, "X_{1,-1}");
  B.br("X11", "Xm11", "Xm11", -2);
  B.br("X11", "X1m1", "X1m1", 2);
  B.br("Xm11", "X1m1", "X11", 4);
  return B.build();
}

std::string unit_name(int i, int j, int n) {
  return n < 10 ? "E" + num(i) + num(j) : "E" + num(i) + "_" + num(j);
}

AlgebraPtr weyl_quesne_algebra(int n) {
  Builder B;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      B.gen(unit_name(i, j, n), true, "E_{" + num(i) + (n < 10 ? "" : ",") + num(j) + "}");
  for (int k = 1; k <= n; ++k) B.gen("b" + num(k));
  for (int k = 1; k <= n; ++k) B.gen("bd" + num(k), false, "b^{\\dagger}_{" + num(k) + "}");
  B.gen("I", false, "\\mathbb{I}");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::string Eij = unit_name(i, j, n);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (std::pair{i, j} >= std::pair{k, l}) continue;
          const std::string Ekl = unit_name(k, l, n);
          if (j == k) B.br(Eij, Ekl, unit_name(i, l, n), 1);
          if (i == l) B.br(Eij, Ekl, unit_name(k, j, n), -1);
        }
      for (int k = 1; k <= n; ++k) {
        if (j == k) B.br(Eij, "bd" + num(k), "bd" + num(i), 1);
        if (i == k) B.br(Eij, "b" + num(k), "b" + num(j), -1);
      }
    }
  for (int k = 1; k <= n; ++k) B.br("b" + num(k), "bd" + num(k), "I", 1);
  return B.build();
}

AlgebraPtr heisenberg_algebra(int n) {
  Builder B;
  for (int k = 1; k <= n; ++k) B.gen("P" + num(k));
  for (int k = 1; k <= n; ++k) B.gen("Q" + num(k));
  B.gen("Z");
  for (int k = 1; k <= n; ++k) B.br("P" + num(k), "Q" + num(k), "Z", 1);
  return B.build();
}

AlgebraPtr so_algebra(int N) {
  Builder B;
  add_so(B, N);
  return B.build();
}

void require_size(const FamilyId& id, int lo, int hi) {
  if (id.N < lo || id.N > hi)
    throw MalformedInput("family " + id.name + " needs size in [" + num(lo) + ", " + num(hi) +
                         "], got " + num(id.N));
}

constexpr int kMaxSize = 40;

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "so",     "su11",   "heisenberg", "weyl_quesne", "Ha",     "IHa",           "QHa",
      "IHa_L",  "IHa_M",  "IHa_A",      "IHa_AM",      "IHa_AL", "IHa_LM",        "boson_example",
      "boson_example_contracted"};
  return names;
}

bool family_takes_size(const std::string& name) {
  return name != "su11" && name != "boson_example" && name != "boson_example_contracted";
}

CatalogEntry build(const FamilyId& id) {
  CatalogEntry e{id, nullptr, std::nullopt, std::nullopt};
  const std::string& n = id.name;
  if (n == "so") {
    require_size(id, 2, kMaxSize);
    e.algebra = so_algebra(id.N);
    e.so_rank = id.N;
  } else if (n == "su11") {
    e.algebra = su11_algebra();
  } else if (n == "heisenberg") {
    require_size(id, 1, kMaxSize);
    e.algebra = heisenberg_algebra(id.N);
  } else if (n == "weyl_quesne") {
    require_size(id, 1, kMaxSize);
    e.algebra = weyl_quesne_algebra(id.N);
    std::map<std::string, std::string> P;
    for (int i = 1; i <= id.N; ++i)
      for (int j = 1; j <= id.N; ++j) P.emplace(unit_name(i, j, id.N), "-bd" + num(i) + "*b" + num(j));
    e.spec = make_spec(e.algebra, "I", P);
  } else if (n == "Ha" || n == "IHa" || n == "QHa" || n.rfind("IHa_", 0) == 0) {
    std::string ext;
    if (n == "QHa") ext = "LAM";
    else if (n.rfind("IHa_", 0) == 0) ext = n.substr(4);
    static const std::set<std::string> known = {"", "LAM", "L", "M", "A", "AM", "AL", "LM"};
    if (!known.count(ext)) throw MalformedInput("unknown family '" + n + "'");
    require_size(id, 3, kMaxSize);
    const bool inhom = n != "Ha";
    e.algebra = hamilton(id.N, inhom, ext);
    e.spec = hamilton_spec(e.algebra, id.N, inhom, ext);
    e.so_rank = id.N;
  } else if (n == "boson_example") {
    const Rational alpha = id.alpha.value_or(Rational(1));
    e.algebra = boson_algebra(alpha);
    if (alpha == 1)
      e.spec = make_spec(e.algebra, "R^2 - T^2",
                         {{"X11", "T*(F1*Q1 + G1*P1) - R*(F1*G1 + Q1*P1)"},
                          {"Xm11", "2*T*G1*Q1 - R*G1^2 - R*Q1^2"},
                          {"X1m1", "2*T*F1*P1 - R*F1^2 - R*P1^2"}});
  } else if (n == "boson_example_contracted") {
    e.algebra = boson_algebra(Rational(0));
    e.spec = make_spec(e.algebra, "-T^2",
                       {{"X11", "T*(F1*Q1 + G1*P1) - R*Q1*P1"},
                        {"Xm11", "2*T*G1*Q1 - R*Q1^2"},
                        {"X1m1", "2*T*F1*P1 - R*P1^2"}});
  } else {
    throw MalformedInput("unknown family '" + n + "'");
  }
  return e;
}

std::optional<PbwElement> quadratic_levi_casimir(const CatalogEntry& entry) {
  const AlgebraPtr& a = entry.algebra;
  if (a->levi().empty()) return std::nullopt;
  if (entry.so_rank) {
    const int N = *entry.so_rank;
    PbwElement c(a);
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        PbwElement J = PbwElement::generator(a, rotation_name(i, j, N));
        c += J * J;
      }
    return c;
  }
  if (a->find("X11") && a->find("Xm11") && a->find("X1m1"))
    return parse_pbw(a, "X11^2 - 1/2*(Xm11*X1m1 + X1m1*Xm11)");
  if (entry.id.name == "weyl_quesne") {
    const int n = entry.id.N;
    PbwElement c(a);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        c += PbwElement::generator(a, unit_name(i, j, n)) * PbwElement::generator(a, unit_name(j, i, n));
    return c;
  }
  return std::nullopt;
}

std::vector<GenIndex> central_generators(const LieAlgebra& algebra) {
  std::vector<GenIndex> out;
  for (GenIndex i = 0; i < algebra.dim(); ++i) {
    bool central = true;
    for (GenIndex j = 0; j < algebra.dim() && central; ++j)
      if (!algebra.structure(i, j).empty()) central = false;
    if (central) out.push_back(i);
  }
  return out;
}

}  // namespace vcopy
