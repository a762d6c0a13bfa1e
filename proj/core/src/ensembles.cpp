#include "incseq/ensembles.hpp"

#include <stdexcept>

namespace incseq {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::U: return "U";
    case Symmetry::O: return "O";
    case Symmetry::S: return "S";
    case Symmetry::UU: return "UU";
    case Symmetry::u: return "u";
    case Symmetry::rot: return "rot";
  }
  return "?";
}

std::optional<Symmetry> parse_symmetry(const std::string& s) {
  for (Symmetry v : {Symmetry::U, Symmetry::O, Symmetry::S, Symmetry::UU, Symmetry::u, Symmetry::rot})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::string to_string(ExtendedSymmetry s) {
  switch (s) {
    case ExtendedSymmetry::O: return "O";
    case ExtendedSymmetry::S: return "S";
    case ExtendedSymmetry::u: return "u";
  }
  return "?";
}

std::optional<ExtendedSymmetry> parse_extended_symmetry(const std::string& s) {
  for (ExtendedSymmetry v : {ExtendedSymmetry::O, ExtendedSymmetry::S, ExtendedSymmetry::u})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

int a_const(Symmetry s) {
  switch (s) {
    case Symmetry::O:
    case Symmetry::S: return 1;
    case Symmetry::U:
    case Symmetry::u: return 2;
    case Symmetry::UU: return 4;
    case Symmetry::rot: break;
  }
  throw std::invalid_argument("a_const: rotation ensemble has no time scale");
}

int ambient_size(Symmetry s, int n) {
  switch (s) {
    case Symmetry::U: return n;
    case Symmetry::O:
    case Symmetry::S:
    case Symmetry::UU: return 2 * n;
    case Symmetry::u:
    case Symmetry::rot: return 4 * n;
  }
  return n;
}

int ambient_size(ExtendedSymmetry s, int n) { return s == ExtendedSymmetry::u ? 2 * n : n; }

Rational ensemble_size(Symmetry s, int n) {
  switch (s) {
    case Symmetry::U: return factorial(n);
    case Symmetry::O:
    case Symmetry::S: return factorial(2 * n) / (pow(Rational(2), n) * factorial(n));
    case Symmetry::UU: return pow(Rational(2), n) * factorial(n);
    case Symmetry::u:
    case Symmetry::rot: return factorial(2 * n) / factorial(n);
  }
  return Rational(0);
}

namespace {

// Depth-first generator: assigning pi(a) = b forces further assignments
// given by `forced`; `forbidden` rejects an assignment outright.
enum class Rule { plain, inv, inv_conj, commute, signed_inv, rot };

class Generator {
 public:
  Generator(int N, Rule rule, bool strict) : N_(N), rule_(rule), strict_(strict), p_(N + 1, 0), used_(N + 1, 0) {}

  void run(const std::function<void(const Perm&)>& visit) {
    visit_ = &visit;
    if (N_ == 0) {
      visit(Perm{});
      return;
    }
    recurse();
  }

 private:
  int io(int x) const { return N_ + 1 - x; }

  bool forbidden(int a, int b) const {
    if (!strict_) return false;
    switch (rule_) {
      case Rule::inv: return a == b;
      case Rule::inv_conj: return b == io(a);
      case Rule::signed_inv: return a == b || b == io(a);
      default: return false;
    }
  }

  int forced(int a, int b, std::pair<int, int>* out) const {
    switch (rule_) {
      case Rule::plain: return 0;
      case Rule::inv: out[0] = {b, a}; return 1;
      case Rule::inv_conj: out[0] = {io(b), io(a)}; return 1;
      case Rule::commute: out[0] = {io(a), io(b)}; return 1;
      case Rule::signed_inv:
        out[0] = {b, a};
        out[1] = {io(b), io(a)};
        return 2;
      case Rule::rot: out[0] = {b, io(a)}; return 1;
    }
    return 0;
  }

  bool assign(int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> stack{{x, y}};
    std::pair<int, int> next[2];
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (p_[a]) {
        if (p_[a] != b) return false;
        continue;
      }
      if (used_[b] || forbidden(a, b)) return false;
      p_[a] = b;
      used_[b] = 1;
      trail.push_back(a);
      int k = forced(a, b, next);
      for (int i = 0; i < k; ++i) stack.push_back(next[i]);
    }
    return true;
  }

  void recurse() {
    int x = 1;
    while (x <= N_ && p_[x]) ++x;
    if (x > N_) {
      (*visit_)(Perm(p_.begin() + 1, p_.end()));
      return;
    }
    for (int y = 1; y <= N_; ++y) {
      if (used_[y]) continue;
      std::vector<int> trail;
      if (assign(x, y, trail)) recurse();
      for (int a : trail) {
        used_[p_[a]] = 0;
        p_[a] = 0;
      }
    }
  }

  int N_;
  Rule rule_;
  bool strict_;
  std::vector<int> p_;
  std::vector<char> used_;
  const std::function<void(const Perm&)>* visit_ = nullptr;
};

Rule rule_of(Symmetry s) {
  switch (s) {
    case Symmetry::U: return Rule::plain;
    case Symmetry::O: return Rule::inv;
    case Symmetry::S: return Rule::inv_conj;
    case Symmetry::UU: return Rule::commute;
    case Symmetry::u: return Rule::signed_inv;
    case Symmetry::rot: return Rule::rot;
  }
  return Rule::plain;
}

Rule rule_of(ExtendedSymmetry s) {
  switch (s) {
    case ExtendedSymmetry::O: return Rule::inv;
    case ExtendedSymmetry::S: return Rule::inv_conj;
    case ExtendedSymmetry::u: return Rule::signed_inv;
  }
  return Rule::plain;
}

}  // namespace

void for_each_member(Symmetry s, int n, const std::function<void(const Perm&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_member: negative n");
  Generator(ambient_size(s, n), rule_of(s), true).run(visit);
}

void for_each_member(ExtendedSymmetry s, int n, const std::function<void(const Perm&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_member: negative n");
  Generator(ambient_size(s, n), rule_of(s), false).run(visit);
}

std::vector<Perm> ensemble_enumerate(Symmetry s, int n) {
  std::vector<Perm> out;
  for_each_member(s, n, [&](const Perm& p) { out.push_back(p); });
  return out;
}

std::vector<Perm> ensemble_enumerate(ExtendedSymmetry s, int n) {
  std::vector<Perm> out;
  for_each_member(s, n, [&](const Perm& p) { out.push_back(p); });
  return out;
}

std::vector<Rational> f_count_table(Symmetry s, int n, int lmax) {
  std::vector<long long> hist(static_cast<size_t>(ambient_size(s, n)) + 1, 0);
  for_each_member(s, n, [&](const Perm& p) { ++hist[static_cast<size_t>(lis(p))]; });
  std::vector<Rational> out;
  long long acc = 0;
  for (int l = 0; l <= lmax; ++l) {
    if (l < static_cast<int>(hist.size())) acc += hist[static_cast<size_t>(l)];
    out.emplace_back(acc);
  }
  return out;
}

Rational f_count(Symmetry s, int n, int l) {
  if (l < 0) return Rational(0);
  return f_count_table(s, n, l).back();
}

DiagonalStats diagonal_stats(const Perm& p) {
  DiagonalStats d;
  const int N = static_cast<int>(p.size());
  for (int x = 1; x <= N; ++x) {
    int y = p[static_cast<size_t>(x - 1)];
    if (y == x) ++d.fixed;
    if (y == N + 1 - x) ++d.antifixed;
  }
  return d;
}

FtildeTable ftilde_table(ExtendedSymmetry s, int n, int lmax) {
  const int N = ambient_size(s, n);
  std::vector<std::vector<std::vector<long long>>> hist(
      static_cast<size_t>(N) + 1,
      std::vector<std::vector<long long>>(static_cast<size_t>(N) + 1, std::vector<long long>(static_cast<size_t>(N) + 1, 0)));
  for_each_member(s, n, [&](const Perm& p) {
    DiagonalStats d = diagonal_stats(p);
    int m = 0, m2 = 0;
    switch (s) {
      case ExtendedSymmetry::O: m = d.fixed; break;
      case ExtendedSymmetry::S: m = d.antifixed; break;
      case ExtendedSymmetry::u:
        m = d.fixed / 2;
        m2 = d.antifixed / 2;
        break;
    }
    ++hist[static_cast<size_t>(m)][static_cast<size_t>(m2)][static_cast<size_t>(lis(p))];
  });
  FtildeTable out(static_cast<size_t>(N) + 1, std::vector<std::vector<Rational>>(static_cast<size_t>(N) + 1));
  for (int m = 0; m <= N; ++m)
    for (int m2 = 0; m2 <= N; ++m2) {
      long long acc = 0;
      auto& row = out[static_cast<size_t>(m)][static_cast<size_t>(m2)];
      for (int l = 0; l <= lmax; ++l) {
        if (l <= N) acc += hist[static_cast<size_t>(m)][static_cast<size_t>(m2)][static_cast<size_t>(l)];
        row.emplace_back(acc);
      }
    }
  return out;
}

Rational ftilde_count(ExtendedSymmetry s, int n, int m, int l, int m2) {
  if (l < 0 || m < 0 || m2 < 0) return Rational(0);
  const int N = ambient_size(s, n);
  if (m > N || m2 > N) return Rational(0);
  return ftilde_table(s, n, l)[static_cast<size_t>(m)][static_cast<size_t>(m2)][static_cast<size_t>(l)];
}

bool convolution_identities_check(int n, int l) {
  if (n < 0 || l < 0) throw std::invalid_argument("convolution_identities_check: negative argument");
  Rational rhs_uu(0);
  for (int m = 0; m <= n; ++m) {
    Rational c = binomial(n, m);
    rhs_uu += c * c * f_count(Symmetry::U, m, l) * f_count(Symmetry::U, n - m, l);
  }
  bool uu_ok = f_count(Symmetry::UU, n, 2 * l) == rhs_uu;
  bool u_ok = f_count(Symmetry::u, n, 2 * l) == binomial(2 * n, n) * f_count(Symmetry::U, n, l);
  return uu_ok && u_ok;
}

bool rotation_count_property(int n, int L) {
  Rational count(0);
  for (const Perm& s : all_permutations(n))
    if (std::max(2 * lis(s), 2 * lds(s) - 1) <= L) count += Rational(1);
  return f_count(Symmetry::rot, n, L) * factorial(n) == ensemble_size(Symmetry::rot, n) * count;
}

}  // namespace incseq
