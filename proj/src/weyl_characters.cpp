#include "thetaorb/weyl_characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace thetaorb {

ClassFunction::ClassFunction(int r) : r_(r) {
  if (r < 0) throw std::invalid_argument("negative degree");
  for (const auto& c : partitions_of(r)) values_[c] = Rational(0);
}

const Rational& ClassFunction::at(const Partition& c) const {
  auto it = values_.find(c);
  if (it == values_.end()) throw std::out_of_range(c.str() + " is not a cycle type of S_" + std::to_string(r_));
  return it->second;
}

void ClassFunction::set(const Partition& c, Rational v) {
  auto it = values_.find(c);
  if (it == values_.end()) throw std::out_of_range(c.str() + " is not a cycle type of S_" + std::to_string(r_));
  it->second = v;
}

namespace {

template <class Op>
ClassFunction combine(const ClassFunction& f, const ClassFunction& g, Op op) {
  if (f.degree() != g.degree()) throw std::invalid_argument("class functions on different groups");
  ClassFunction h(f.degree());
  for (const auto& [c, v] : f.values()) h.set(c, op(v, g.at(c)));
  return h;
}

}  // namespace

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  return combine(*this, o, [](const Rational& x, const Rational& y) { return x * y; });
}
ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  return combine(*this, o, [](const Rational& x, const Rational& y) { return x + y; });
}
ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  return combine(*this, o, [](const Rational& x, const Rational& y) { return x - y; });
}

ClassFunction ClassFunction::scaled(const Rational& c) const {
  ClassFunction h(r_);
  for (const auto& [k, v] : values_) h.set(k, v * c);
  return h;
}

bool ClassFunction::integral() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

std::int64_t centralizer_order(const Partition& c) {
  std::int64_t z = 1;
  for (auto [part, mult] : multiplicities(c))
    for (int k = 1; k <= mult; ++k) z *= static_cast<std::int64_t>(part) * k;
  return z;
}

int sign_of(const Partition& c) {
  int s = 1;
  for (int x : c.parts())
    if (x % 2 == 0) s = -s;
  return s;
}

Rational inner(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("class functions on different groups");
  Rational s(0);
  for (const auto& [c, v] : f.values()) s += v * g.at(c) / Rational(centralizer_order(c));
  return s;
}

ClassFunction trivial_character(int r) {
  ClassFunction f(r);
  for (const auto& c : partitions_of(r)) f.set(c, Rational(1));
  return f;
}

ClassFunction sign_character(int r) {
  ClassFunction f(r);
  for (const auto& c : partitions_of(r)) f.set(c, Rational(sign_of(c)));
  return f;
}

namespace {

// chi^lambda on the cycle type mu[from..]; lambda given by its beta-set
std::int64_t mn_rec(const Partition& lambda, const std::vector<int>& mu, std::size_t from,
                    std::map<std::pair<Partition, std::size_t>, std::int64_t>& memo) {
  if (from == mu.size()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + len - 1 - i;
  const int k = mu[from];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i], nb = b - k;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > nb && c < b) ++between;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) parts.push_back(nbeta[static_cast<std::size_t>(j)] - (len - 1 - j));
    total += (between % 2 ? -1 : 1) * mn_rec(Partition(parts), mu, from + 1, memo);
  }
  memo[key] = total;
  return total;
}

}  // namespace

std::int64_t mn_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("lambda and mu must have the same size");
  thread_local std::map<std::pair<Partition, std::size_t>, std::int64_t> memo;
  // the memo is keyed on the remaining suffix of mu, so it is per-mu
  memo.clear();
  return mn_rec(lambda, mu.parts(), 0, memo);
}

ClassFunction mn_character(const Partition& lambda) {
  ClassFunction f(lambda.size());
  for (const auto& c : partitions_of(lambda.size())) f.set(c, Rational(mn_value(lambda, c)));
  return f;
}

std::vector<YoungClass> young_classes(const Partition& lambda) {
  std::vector<YoungClass> out{{}};
  for (int block : lambda.parts()) {
    std::vector<YoungClass> next;
    const auto ps = partitions_of(block);
    for (const auto& prefix : out)
      for (const auto& p : ps) {
        YoungClass c = prefix;
        c.push_back(p);
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

Partition fuse(const YoungClass& c) {
  Partition u;
  for (const auto& p : c) u = union_of(u, p);
  return u;
}

std::int64_t young_centralizer_order(const YoungClass& c) {
  std::int64_t z = 1;
  for (const auto& p : c) z *= centralizer_order(p);
  return z;
}

ClassFunction induced_sign(const Partition& lambda) {
  // Ind f (c) = z_c * sum over W_lambda-classes d fusing to c of f(d) / z_d
  ClassFunction f(lambda.size());
  for (const auto& d : young_classes(lambda)) {
    Partition c = fuse(d);
    f.set(c, f.at(c) + Rational(sign_of(c) * centralizer_order(c), young_centralizer_order(d)));
  }
  return f;
}

Rational inner_restricted(const ClassFunction& f, const ClassFunction& g, const Partition& lambda) {
  if (f.degree() != lambda.size() || g.degree() != lambda.size())
    throw std::invalid_argument("Young subgroup does not match the degree");
  Rational s(0);
  for (const auto& d : young_classes(lambda)) {
    Partition c = fuse(d);
    s += f.at(c) * g.at(c) / Rational(young_centralizer_order(d));
  }
  return s;
}

std::map<Partition, Rational> decompose(const ClassFunction& f) {
  std::map<Partition, Rational> out;
  for (const auto& mu : partitions_of(f.degree())) {
    Rational m = inner(f, mn_character(mu));
    if (m != 0) out[mu] = m;
  }
  return out;
}

ClassFunction j_induce_sign(const Partition& lambda) {
  const Partition lead = transpose(lambda);
  for (const auto& [nu, mult] : decompose(induced_sign(lambda))) {
    if (nu == lead) {
      if (mult != 1) throw std::logic_error("leading constituent of Ind(sign) has multiplicity " + to_string(mult));
      continue;
    }
    const Partition mu = transpose(nu);
    if (!(dominates(mu, lambda) && mu != lambda))
      throw std::logic_error("Ind(sign) of " + lambda.str() + " contains chi^" + nu.str() + " outside the dominance cone");
  }
  return mn_character(lead);
}

std::vector<int> permutation_of_type(const Partition& c) {
  std::vector<int> w(static_cast<std::size_t>(c.size()));
  int start = 0;
  for (int len : c.parts()) {
    for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  return w;
}

namespace {

IntVector permute(const std::vector<int>& w, const IntVector& y) {
  IntVector z(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) z(w[static_cast<std::size_t>(i)]) = y(i);
  return z;
}

LatticeQuotient quotient_for(const CoverSpec& spec) {
  if (spec.group().form != IsogenyForm::GL) throw std::invalid_argument("the quotient action space is built for GL_r covers");
  const int r = spec.group().rank;
  // |Y / Y_{Q,n}| divides n^r; refuse early if even the bound is hopeless
  IntMatrix basis = congruence_sublattice(spec.gram(), spec.degree());
  LatticeQuotient q(basis);
  if (q.order() > QuotientActionSpace::kMaxElements)
    throw std::invalid_argument("Y/Y_{Q,n} has " + std::to_string(q.order()) + " elements, above the limit");
  std::int64_t nr = 1;
  for (int i = 0; i < r; ++i) nr *= spec.degree();
  if (nr % q.order() != 0) throw std::logic_error("|Y/Y_{Q,n}| does not divide n^r");
  return q;
}

}  // namespace

QuotientActionSpace::QuotientActionSpace(const CoverSpec& spec, std::int64_t shift)
    : r_(spec.group().rank), quotient_(quotient_for(spec)), delta_(r_) {
  for (int i = 0; i < r_; ++i) delta_(i) = r_ - 1 - i + shift;
  // W-stability of Y_{Q,n}: simple transpositions map the basis into it
  for (int s = 0; s + 1 < r_; ++s) {
    std::vector<int> w(static_cast<std::size_t>(r_));
    std::iota(w.begin(), w.end(), 0);
    std::swap(w[static_cast<std::size_t>(s)], w[static_cast<std::size_t>(s + 1)]);
    for (Eigen::Index j = 0; j < quotient_.basis().cols(); ++j)
      if (!quotient_.contains(permute(w, quotient_.basis().col(j))))
        throw std::logic_error("Y_{Q,n} is not stable under the Weyl group");
    auto img = act(w);
    std::vector<bool> seen(img.size(), false);
    for (auto x : img) {
      if (seen[static_cast<std::size_t>(x)]) throw std::logic_error("twisted action is not a permutation");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
}

std::vector<std::int64_t> QuotientActionSpace::act(const std::vector<int>& w) const {
  if (static_cast<int>(w.size()) != r_) throw std::invalid_argument("permutation has the wrong length");
  std::vector<std::int64_t> out(static_cast<std::size_t>(size()));
  for (std::int64_t idx = 0; idx < size(); ++idx) {
    IntVector y = quotient_.representative(idx);
    out[static_cast<std::size_t>(idx)] = quotient_.index_of(IntVector(permute(w, y - delta_) + delta_));
  }
  return out;
}

std::int64_t QuotientActionSpace::fixed_points(const Partition& cycleType) const {
  if (cycleType.size() != r_) throw std::invalid_argument("cycle type has the wrong size");
  const auto w = permutation_of_type(cycleType);
  std::int64_t count = 0;
  for (std::int64_t idx = 0; idx < size(); ++idx) {
    IntVector y = quotient_.representative(idx);
    if (quotient_.index_of(IntVector(permute(w, y - delta_) + delta_)) == idx) ++count;
  }
  return count;
}

ClassFunction sigma_x_character(const QuotientActionSpace& space) {
  ClassFunction f(space.rank());
  for (const auto& c : partitions_of(space.rank())) f.set(c, Rational(space.fixed_points(c)));
  return f;
}

namespace {

std::int64_t as_integer(const Rational& q, const std::string& what) {
  if (!is_integer(q)) throw std::logic_error(what + " is not an integer: " + to_string(q));
  return q.numerator();
}

}  // namespace

std::int64_t dim_wh(const Partition& mu, const ClassFunction& sigma) {
  return as_integer(inner_restricted(sign_character(sigma.degree()), sigma, mu), "dim Wh(" + mu.str() + ")");
}

CCoefficientAudit c_coefficient(const CoverSpec& spec) {
  if (spec.group().form != IsogenyForm::GL) throw std::invalid_argument("the coefficient is computed for GL_r covers");
  CCoefficientAudit a;
  a.r = spec.group().rank;
  a.n = spec.degree();
  a.nAlpha = n_alpha(spec, 0);
  a.lambda = Partition([&] {
    std::vector<int> v(static_cast<std::size_t>(a.r / a.nAlpha), a.nAlpha);
    v.push_back(a.r % a.nAlpha);
    return v;
  }());

  QuotientActionSpace space(spec);
  a.quotientSize = space.size();
  const ClassFunction sigma = sigma_x_character(space);
  const ClassFunction eps = sign_character(a.r);

  a.lhs = dim_wh(a.lambda, sigma);
  a.rhs = as_integer(inner(mn_character(a.lambda), eps * sigma), "<chi^lambda, sign x sigma>");
  for (const auto& mu : partitions_of(a.r)) a.dimTable.emplace_back(mu, dim_wh(mu, sigma));
  if (a.lhs != a.rhs)
    throw std::logic_error("c_O mismatch for " + spec.str() + ": lhs " + std::to_string(a.lhs) + " != rhs " + std::to_string(a.rhs));
  a.value = a.rhs;
  return a;
}

}  // namespace thetaorb
