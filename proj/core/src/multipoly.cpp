#include "incseq/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace incseq {

namespace {
constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;
}

void Monomial::set_exponent(int slot, int e) {
  if (slot < 0 || slot >= kMaxVars) throw std::out_of_range("Monomial: variable slot out of range");
  if (e < 0 || e > 127) throw std::overflow_error("Monomial: exponent out of range");
  auto& word = w[slot >> 3];
  int shift = (slot & 7) * 8;
  word = (word & ~(std::uint64_t{0xff} << shift)) | (static_cast<std::uint64_t>(e) << shift);
}

int Monomial::total_degree() const {
  int d = 0;
  for (int s = 0; s < kMaxVars; ++s) d += exponent(s);
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.w[0] = a.w[0] + b.w[0];
  r.w[1] = a.w[1] + b.w[1];
  if ((r.w[0] | r.w[1]) & kHighBits) throw std::overflow_error("Monomial: exponent overflow");
  return r;
}

Grading Grading::total(int D) {
  Grading g;
  g.bound[0] = D;
  return g;
}

Grading& Grading::assign(int slot, int group_id) {
  if (slot < 0 || slot >= kMaxVars || group_id < 0 || group_id >= kMaxGroups)
    throw std::out_of_range("Grading::assign: slot or group out of range");
  group[static_cast<size_t>(slot)] = static_cast<std::uint8_t>(group_id);
  return *this;
}

Grading& Grading::set_bound(int group_id, int b) {
  if (group_id < 0 || group_id >= kMaxGroups) throw std::out_of_range("Grading::set_bound: group out of range");
  bound[static_cast<size_t>(group_id)] = b;
  return *this;
}

std::array<int, kMaxGroups> Grading::degrees(const Monomial& m) const {
  std::array<int, kMaxGroups> d{};
  for (int s = 0; s < kMaxVars; ++s) d[group[static_cast<size_t>(s)]] += m.exponent(s);
  return d;
}

bool Grading::admits(const Monomial& m) const {
  auto d = degrees(m);
  for (int k = 0; k < kMaxGroups; ++k)
    if (bound[static_cast<size_t>(k)] >= 0 && d[static_cast<size_t>(k)] > bound[static_cast<size_t>(k)]) return false;
  return true;
}

MultiPoly MultiPoly::constant(const Rational& c, const Grading& g) {
  MultiPoly p(g);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int slot, const Grading& g) {
  Monomial m;
  m.set_exponent(slot, 1);
  return monomial(m, Rational(1), g);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c, const Grading& g) {
  MultiPoly p(g);
  if (!c.is_zero() && g.admits(m)) p.terms_.emplace_back(m, c);
  return p;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational();
}

int MultiPoly::degree_in(const std::vector<int>& slots) const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int s : slots) d += m.exponent(s);
    best = std::max(best, d);
  }
  return best;
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (!(g_ == o.g_)) throw std::invalid_argument("MultiPoly: operands carry different gradings");
}

namespace {
template <class Op>
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b, Op op) {
  std::vector<MultiPoly::Term> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, Rational());
      op(r.back().second, b[j].second);
      ++j;
    } else {
      Rational c = a[i].second;
      op(c, b[j].second);
      if (!c.is_zero()) r.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}
}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  terms_ = merge(terms_, o.terms_, [](Rational& x, const Rational& y) { x += y; });
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  terms_ = merge(terms_, o.terms_, [](Rational& x, const Rational& y) { x -= y; });
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  const Grading& g = a.g_;
  if (a.terms_.empty() || b.terms_.empty()) return MultiPoly(g);
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;

  using Deg = std::array<int, kMaxGroups>;
  std::vector<Deg> da(a.terms_.size()), db(b.terms_.size());
  for (size_t i = 0; i < a.terms_.size(); ++i) da[i] = g.degrees(a.terms_[i].first);
  for (size_t j = 0; j < b.terms_.size(); ++j) db[j] = g.degrees(b.terms_[j].first);
  // Visit b in increasing group-0 degree so the inner loop can stop early.
  std::vector<size_t> order(b.terms_.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return db[x][0] < db[y][0]; });
  const int b0 = g.bound[0];

  MultiPolyBuilder out(g);
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    for (size_t j : order) {
      if (b0 >= 0 && da[i][0] + db[j][0] > b0) break;
      bool ok = true;
      for (int k = 1; k < kMaxGroups; ++k) {
        int bk = g.bound[static_cast<size_t>(k)];
        if (bk >= 0 && da[i][static_cast<size_t>(k)] + db[j][static_cast<size_t>(k)] > bk) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      out.addmul(a.terms_[i].first * b.terms_[j].first, a.terms_[i].second, b.terms_[j].second);
    }
  }
  return out.build();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::filtered(const std::function<bool(const Monomial&)>& keep) const {
  MultiPoly r(g_);
  for (const auto& t : terms_)
    if (keep(t.first)) r.terms_.push_back(t);
  return r;
}

MultiPoly MultiPoly::evaluate(int slot, const Rational& value) const {
  if (g_.bounded(slot)) throw std::invalid_argument("MultiPoly::evaluate: variable lies in a truncated group");
  MultiPolyBuilder out(g_);
  for (const auto& [m, c] : terms_) {
    Monomial k = m;
    int e = m.exponent(slot);
    k.set_exponent(slot, 0);
    out.add(k, c * pow(value, e));
  }
  return out.build();
}

MultiPoly MultiPoly::regraded(const Grading& g) const {
  MultiPoly r(g);
  for (const auto& t : terms_)
    if (g.admits(t.first)) r.terms_.push_back(t);
  return r;
}

MultiPoly MultiPoly::coefficient_of(int slot, int e) const {
  MultiPoly r(g_);
  for (const auto& [m, c] : terms_) {
    if (m.exponent(slot) != e) continue;
    Monomial k = m;
    k.set_exponent(slot, 0);
    r.terms_.emplace_back(k, c);
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return r;
}

namespace {
// Checks that every nonconstant term has positive degree in some bounded
// group; then powers of it eventually vanish.
bool nilpotent_terms(const MultiPoly& u, bool skip_constant) {
  const Grading& g = u.grading();
  for (const auto& [m, c] : u.terms()) {
    if (skip_constant && m.is_one()) continue;
    auto d = g.degrees(m);
    bool nil = false;
    for (int k = 0; k < kMaxGroups; ++k)
      if (g.bound[static_cast<size_t>(k)] >= 0 && d[static_cast<size_t>(k)] > 0) nil = true;
    if (!nil) return false;
  }
  return true;
}
void require_nilpotent(const MultiPoly& u, const char* who) {
  if (!nilpotent_terms(u, false))
    throw std::domain_error(std::string(who) + ": term is not nilpotent in the truncation");
}
}  // namespace

bool MultiPoly::is_unit() const { return !constant_term().is_zero() && nilpotent_terms(*this, true); }

MultiPoly MultiPoly::reciprocal() const {
  Rational c = constant_term();
  if (c.is_zero()) throw std::domain_error("MultiPoly::reciprocal: zero constant term");
  Rational ic = Rational(1) / c;
  MultiPoly u = (*this) * ic - one_like(*this);
  require_nilpotent(u, "MultiPoly::reciprocal");
  MultiPoly sum = one_like(*this), term = one_like(*this);
  MultiPoly neg = -u;
  for (;;) {
    term = term * neg;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * ic;
}

MultiPoly pow(const MultiPoly& p, int e) {
  if (e < 0) return pow(p.reciprocal(), -e);
  MultiPoly r = one_like(p), b = p;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MultiPoly exp(const MultiPoly& p) {
  if (!p.constant_term().is_zero()) throw std::domain_error("exp: nonzero constant term");
  require_nilpotent(p, "exp");
  MultiPoly sum = one_like(p), term = one_like(p);
  for (int k = 1;; ++k) {
    term = term * p * Rational(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int s = 0; s < kMaxVars; ++s) {
      int e = m.exponent(s);
      if (!e) continue;
      os << '*' << (static_cast<size_t>(s) < names.size() ? names[static_cast<size_t>(s)] : "v" + std::to_string(s));
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

void MultiPolyBuilder::add(const Monomial& m, const Rational& c) {
  if (c.is_zero() || !g_.admits(m)) return;
  auto [it, fresh] = index_.try_emplace(m, terms_.size());
  if (fresh)
    terms_.emplace_back(m, c);
  else
    terms_[it->second].second += c;
}

void MultiPolyBuilder::addmul(const Monomial& m, const Rational& a, const Rational& b) {
  auto [it, fresh] = index_.try_emplace(m, terms_.size());
  if (fresh) terms_.emplace_back(m, Rational());
  incseq::addmul(terms_[it->second].second, a, b);
}

MultiPoly MultiPolyBuilder::build() {
  MultiPoly p(g_);
  p.terms_.reserve(terms_.size());
  for (auto& t : terms_)
    if (!t.second.is_zero()) p.terms_.push_back(std::move(t));
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return x.first < y.first; });
  terms_.clear();
  index_.clear();
  return p;
}

}  // namespace incseq
