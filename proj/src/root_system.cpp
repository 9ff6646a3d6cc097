#include "thetaorb/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace thetaorb {

std::string CartanLabel::str() const {
  return std::string(isShort ? "~" : "") + family + std::to_string(rank);
}

CartanLabel parse_cartan_label(const std::string& text) {
  CartanLabel l;
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '~') {
    l.isShort = true;
    ++i;
  }
  if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i])))
    throw std::invalid_argument("bad Cartan label '" + text + "'");
  l.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
  std::string digits;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (digits.empty() || i != text.size()) throw std::invalid_argument("bad Cartan label '" + text + "'");
  l.rank = std::stoi(digits);
  return l;
}

int root_count(char family, int rank) {
  switch (family) {
    case 'A': return rank * (rank + 1);
    case 'B':
    case 'C': return 2 * rank * rank;
    case 'D': return 2 * rank * (rank - 1);
    case 'G': return 12;
    case 'F': return 48;
    case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
  }
  throw std::invalid_argument("unknown root system family");
}

namespace {

IntVector unit(int dim, int i, std::int64_t v = 1) {
  IntVector e = IntVector::Zero(dim);
  e(i) = v;
  return e;
}

// simple roots (as columns) and the coordinate scale
std::pair<IntMatrix, int> simple_roots(char family, int rank) {
  auto bad = [&] {
    return std::invalid_argument("unsupported root system " + std::string(1, family) + std::to_string(rank));
  };
  if (rank < 1) throw bad();
  if (family == 'A') {
    IntMatrix s(rank + 1, rank);
    for (int i = 0; i < rank; ++i) s.col(i) = unit(rank + 1, i) - unit(rank + 1, i + 1);
    return {s, 1};
  }
  if (family == 'B' || family == 'C' || family == 'D') {
    if (rank < 2 || (family == 'D' && rank < 3)) throw bad();
    IntMatrix s(rank, rank);
    for (int i = 0; i + 1 < rank; ++i) s.col(i) = unit(rank, i) - unit(rank, i + 1);
    if (family == 'B') s.col(rank - 1) = unit(rank, rank - 1);
    if (family == 'C') s.col(rank - 1) = unit(rank, rank - 1, 2);
    if (family == 'D') s.col(rank - 1) = unit(rank, rank - 2) + unit(rank, rank - 1);
    return {s, 1};
  }
  if (family == 'G') {
    if (rank != 2) throw bad();
    IntMatrix s(3, 2);
    s.col(0) << 1, -1, 0;
    s.col(1) << -2, 1, 1;
    return {s, 1};
  }
  if (family == 'F') {
    if (rank != 4) throw bad();
    IntMatrix s(4, 4);
    s.col(0) << 0, 2, -2, 0;
    s.col(1) << 0, 0, 2, -2;
    s.col(2) << 0, 0, 0, 2;
    s.col(3) << 1, -1, -1, -1;
    return {s, 2};
  }
  if (family == 'E') {
    if (rank < 6 || rank > 8) throw bad();
    IntMatrix e8(8, 8);
    e8.col(0) << 1, -1, -1, -1, -1, -1, -1, 1;
    e8.col(1) << 2, 2, 0, 0, 0, 0, 0, 0;
    for (int i = 2; i < 8; ++i) e8.col(i) = unit(8, i - 1, 2) - unit(8, i - 2, 2);
    return {e8.leftCols(rank), 2};
  }
  throw bad();
}

int graph_degree(const IntMatrix& a, int i) {
  int d = 0;
  for (int j = 0; j < a.rows(); ++j)
    if (j != i && a(i, j) != 0) ++d;
  return d;
}

// length of the arm starting at `start`, leaving `from`
int arm_length(const IntMatrix& a, int from, int start) {
  int len = 1, prev = from, cur = start;
  for (;;) {
    int next = -1;
    for (int j = 0; j < a.rows(); ++j)
      if (j != cur && j != prev && a(cur, j) != 0) next = j;
    if (next < 0) return len;
    prev = cur;
    cur = next;
    ++len;
  }
}

int rank_of(RatMatrix m) {
  int rank = 0;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.row(rank).swap(m.row(piv));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(rank, c);
      m.row(r) -= f * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> key_of(const IntVector& v) { return std::vector<std::int64_t>(v.data(), v.data() + v.size()); }

}  // namespace

RootSystemData build(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  auto [simples, scale] = simple_roots(family, rank);
  RootSystemData rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.scale_ = scale;

  IntMatrix gram = simples.transpose() * simples;
  rs.cartan_.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan_(i, j) = 2 * gram(i, j) / gram(i, i);

  // close the simple roots under the simple reflections, in simple-root coordinates
  std::vector<IntVector> found;
  std::map<std::vector<std::int64_t>, int> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < rank; ++i) {
    IntVector e = unit(rank, i);
    seen[key_of(e)] = 0;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector b = queue.front();
    queue.pop_front();
    found.push_back(b);
    for (int i = 0; i < rank; ++i) {
      std::int64_t p = 0;
      for (int k = 0; k < rank; ++k) p += b(k) * rs.cartan_(i, k);
      IntVector c = b;
      c(i) -= p;
      if (seen.emplace(key_of(c), 0).second) queue.push_back(c);
    }
  }
  if (static_cast<int>(found.size()) != root_count(family, rank))
    throw std::logic_error("root closure produced the wrong number of roots for " + std::string(1, family) +
                           std::to_string(rank));

  std::vector<IntVector> pos;
  for (const auto& b : found)
    if (b.sum() > 0) pos.push_back(b);
  std::sort(pos.begin(), pos.end(), [](const IntVector& x, const IntVector& y) {
    if (x.sum() != y.sum()) return x.sum() < y.sum();
    return std::lexicographical_compare(y.data(), y.data() + y.size(), x.data(), x.data() + x.size());
  });
  const int np = static_cast<int>(pos.size());
  rs.coeffs_.resize(rank, 2 * np);
  for (int i = 0; i < np; ++i) {
    rs.coeffs_.col(i) = pos[static_cast<std::size_t>(i)];
    rs.coeffs_.col(i + np) = -pos[static_cast<std::size_t>(i)];
  }
  rs.roots_ = simples * rs.coeffs_;
  rs.norms_.resize(static_cast<std::size_t>(2 * np));
  for (int i = 0; i < 2 * np; ++i) rs.norms_[static_cast<std::size_t>(i)] = rs.roots_.col(i).squaredNorm();
  rs.minNorm_ = *std::min_element(rs.norms_.begin(), rs.norms_.end());
  rs.maxNorm_ = *std::max_element(rs.norms_.begin(), rs.norms_.end());

  rs.cocoeffs_.resize(rank, 2 * np);
  for (int i = 0; i < 2 * np; ++i) {
    for (int k = 0; k < rank; ++k) {
      std::int64_t num = rs.coeffs_(k, i) * gram(k, k);
      if (num % rs.norm2(i) != 0) throw std::logic_error("non-integral coroot coordinates");
      rs.cocoeffs_(k, i) = num / rs.norm2(i);
    }
  }
  for (int i = 0; i < 2 * np; ++i) rs.lookup_[key_of(rs.coeffs_.col(i))] = i;

  RatMatrix c = inverse(to_rational(IntMatrix(rs.cartan_.transpose())));
  rs.weights_ = to_rational(simples) * c.transpose();
  rs.rho_ = RatVector::Zero(rs.ambient_dim());
  rs.rhoCheck_ = RatVector::Zero(rs.ambient_dim());
  for (int i = 0; i < np; ++i) {
    rs.rho_ += to_rational(IntVector(rs.roots_.col(i))) / Rational(2);
    rs.rhoCheck_ += rs.coroot(i) / Rational(2);
  }
  return rs;
}

RootSystemData build(const std::string& label) {
  CartanLabel l = parse_cartan_label(label);
  return build(l.family, l.rank);
}

std::string RootSystemData::label() const { return std::string(1, family_) + std::to_string(rank_); }

RatVector RootSystemData::coroot(int i) const {
  RatVector v = to_rational(IntVector(roots_.col(i)));
  return v * Rational(2 * scale_ * scale_, norm2(i));
}

int RootSystemData::height(int i) const { return static_cast<int>(coeffs_.col(i).sum()); }

int RootSystemData::index_of_coeffs(const IntVector& coeffs) const {
  auto it = lookup_.find(key_of(coeffs));
  return it == lookup_.end() ? -1 : it->second;
}

Rational RootSystemData::pairing(const RatVector& x, int rootIndex) const {
  Rational dot(0);
  for (int k = 0; k < ambient_dim(); ++k) dot += x(k) * Rational(roots_(k, rootIndex));
  return dot * Rational(2, norm2(rootIndex));
}

Rational RootSystemData::pairing_weight(const RatVector& nu, int rootIndex) const {
  if (nu.size() != rank_) throw std::invalid_argument("weight has the wrong number of coordinates");
  Rational s(0);
  for (int k = 0; k < rank_; ++k) s += nu(k) * Rational(cocoeffs_(k, rootIndex));
  return s;
}

RatVector RootSystemData::weight_coords(const RatVector& x) const {
  RatVector out(rank_);
  for (int i = 0; i < rank_; ++i) out(i) = pairing(x, i);
  return out;
}

std::int64_t RootSystemData::weyl_group_order() const {
  // heights partition: count[k] = #positive roots of height k; its transpose
  // lists the exponents
  int maxH = 0;
  for (int i = 0; i < num_positive(); ++i) maxH = std::max(maxH, height(i));
  std::vector<int> count(static_cast<std::size_t>(maxH + 1), 0);
  for (int i = 0; i < num_positive(); ++i) ++count[static_cast<std::size_t>(height(i))];
  std::int64_t order = 1;
  for (int e = 1; e <= maxH; ++e) {
    int mult = count[static_cast<std::size_t>(e)] - (e + 1 <= maxH ? count[static_cast<std::size_t>(e + 1)] : 0);
    for (int t = 0; t < mult; ++t) order *= e + 1;
  }
  return order;
}

CartanLabel classify_component(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0 || a.cols() != n) throw std::invalid_argument("not a Cartan matrix");
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 2) throw std::invalid_argument("not a Cartan matrix");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0 || (a(i, j) == 0) != (a(j, i) == 0)) throw std::invalid_argument("not a Cartan matrix");
    }
  }
  // connectivity and tree shape
  std::vector<int> seen{0};
  std::vector<bool> mark(static_cast<std::size_t>(n), false);
  mark[0] = true;
  for (std::size_t k = 0; k < seen.size(); ++k)
    for (int j = 0; j < n; ++j)
      if (!mark[static_cast<std::size_t>(j)] && a(seen[k], j) != 0) {
        mark[static_cast<std::size_t>(j)] = true;
        seen.push_back(j);
      }
  if (static_cast<int>(seen.size()) != n) throw std::invalid_argument("Cartan matrix is not irreducible");
  int edges = 0, maxBond = 0;
  int bi = -1, bj = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) != 0) {
        ++edges;
        int bond = static_cast<int>(a(i, j) * a(j, i));
        if (bond > 3) throw std::invalid_argument("not a finite-type Cartan matrix");
        if (bond > 1) {
          if (maxBond > 1) throw std::invalid_argument("not a finite-type Cartan matrix");
          bi = i;
          bj = j;
        }
        maxBond = std::max(maxBond, bond);
      }
  if (edges != n - 1) throw std::invalid_argument("not a finite-type Cartan matrix");

  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    int d = graph_degree(a, i);
    if (d > 3) throw std::invalid_argument("not a finite-type Cartan matrix");
    if (d == 3) branch.push_back(i);
  }
  if (maxBond == 3) {
    if (n != 2) throw std::invalid_argument("not a finite-type Cartan matrix");
    return {'G', 2, false};
  }
  if (maxBond == 2) {
    if (!branch.empty()) throw std::invalid_argument("not a finite-type Cartan matrix");
    if (n == 2) return {'B', 2, false};
    bool iLeaf = graph_degree(a, bi) == 1, jLeaf = graph_degree(a, bj) == 1;
    if (!iLeaf && !jLeaf) {
      if (n == 4) return {'F', 4, false};
      throw std::invalid_argument("not a finite-type Cartan matrix");
    }
    int leaf = iLeaf ? bi : bj, other = iLeaf ? bj : bi;
    // a(leaf, other) = 2 (leaf, other) / (leaf, leaf) is -2 when the leaf is short
    return {a(leaf, other) == -2 ? 'B' : 'C', n, false};
  }
  if (branch.empty()) return {'A', n, false};
  if (branch.size() > 1) throw std::invalid_argument("not a finite-type Cartan matrix");
  std::vector<int> arms;
  for (int j = 0; j < n; ++j)
    if (j != branch[0] && a(branch[0], j) != 0) arms.push_back(arm_length(a, branch[0], j));
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n, false};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n, false};
  throw std::invalid_argument("not a finite-type Cartan matrix");
}

SubsystemReport subsystem_from_members(const RootSystemData& rs, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  SubsystemReport rep;
  rep.memberRoots = members;
  std::vector<bool> in(static_cast<std::size_t>(rs.num_roots()), false);
  for (int m : members) in[static_cast<std::size_t>(m)] = true;
  for (int m : members)
    if (!in[static_cast<std::size_t>(rs.negative_of(m))])
      throw std::invalid_argument("root subset is not closed under negation");

  // simple system: positive members that are not sums of two positive members
  std::vector<int> pos;
  for (int m : members)
    if (rs.is_positive(m)) pos.push_back(m);
  std::vector<bool> decomposable(static_cast<std::size_t>(rs.num_roots()), false);
  for (std::size_t x = 0; x < pos.size(); ++x)
    for (std::size_t y = x; y < pos.size(); ++y) {
      int s = rs.index_of_coeffs(rs.root_coeffs().col(pos[x]) + rs.root_coeffs().col(pos[y]));
      if (s >= 0 && in[static_cast<std::size_t>(s)]) decomposable[static_cast<std::size_t>(s)] = true;
    }
  for (int p : pos)
    if (!decomposable[static_cast<std::size_t>(p)]) rep.simpleRoots.push_back(p);

  // connected components of the simple system
  const int k = static_cast<int>(rep.simpleRoots.size());
  auto inner = [&](int i, int j) { return (rs.root(i).transpose() * rs.root(j))(0, 0); };
  std::vector<int> comp(static_cast<std::size_t>(k), -1);
  int ncomp = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < k; ++v)
        if (comp[static_cast<std::size_t>(v)] < 0 &&
            inner(rep.simpleRoots[static_cast<std::size_t>(u)], rep.simpleRoots[static_cast<std::size_t>(v)]) != 0) {
          comp[static_cast<std::size_t>(v)] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    SubsystemComponent sc;
    for (int s = 0; s < k; ++s)
      if (comp[static_cast<std::size_t>(s)] == c) sc.simpleRoots.push_back(rep.simpleRoots[static_cast<std::size_t>(s)]);
    const int m = static_cast<int>(sc.simpleRoots.size());
    IntMatrix cm(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int ri = sc.simpleRoots[static_cast<std::size_t>(i)], rj = sc.simpleRoots[static_cast<std::size_t>(j)];
        cm(i, j) = 2 * inner(ri, rj) / rs.norm2(ri);
      }
    sc.label = classify_component(cm);
    for (int r : members) {
      for (int s : sc.simpleRoots)
        if (inner(r, s) != 0) {
          sc.roots.push_back(r);
          break;
        }
    }
    bool simplyLaced = sc.label.family == 'A' || sc.label.family == 'D' || sc.label.family == 'E';
    if (simplyLaced && rs.has_two_lengths() && !rs.is_long(sc.simpleRoots.front())) sc.label.isShort = true;
    rep.components.push_back(std::move(sc));
  }
  std::sort(rep.components.begin(), rep.components.end(), [](const auto& x, const auto& y) {
    if (x.label.rank != y.label.rank) return x.label.rank > y.label.rank;
    if (x.label.family != y.label.family) return x.label.family > y.label.family;
    return x.label.isShort > y.label.isShort;
  });

  // closure in the rational span
  if (k > 0) {
    RatMatrix basis(rs.ambient_dim(), k);
    for (int s = 0; s < k; ++s) basis.col(s) = to_rational(IntVector(rs.root(rep.simpleRoots[static_cast<std::size_t>(s)])));
    for (int r = 0; r < rs.num_positive() && rep.spanClosed; ++r) {
      if (in[static_cast<std::size_t>(r)]) continue;
      RatMatrix ext(rs.ambient_dim(), k + 1);
      ext.leftCols(k) = basis;
      ext.col(k) = to_rational(IntVector(rs.root(r)));
      if (rank_of(ext) == k) rep.spanClosed = false;
    }
  }
  return rep;
}

SubsystemReport integral_subsystem(const RootSystemData& rs, const RatVector& nu) {
  std::vector<int> members;
  for (int i = 0; i < rs.num_roots(); ++i)
    if (is_integer(rs.pairing_weight(nu, i))) members.push_back(i);
  return subsystem_from_members(rs, std::move(members));
}

SubsystemReport integral_subsystem_dual(const RootSystemData& dual, const RatVector& nu) {
  if (nu.size() != dual.rank()) throw std::invalid_argument("weight has the wrong number of coordinates");
  std::vector<int> members;
  for (int i = 0; i < dual.num_roots(); ++i) {
    Rational s(0);
    for (int k = 0; k < dual.rank(); ++k) s += nu(k) * Rational(dual.root_coeffs()(k, i));
    if (is_integer(s)) members.push_back(i);
  }
  return subsystem_from_members(dual, std::move(members));
}

std::map<CartanLabel, int> SubsystemReport::multiset() const {
  std::map<CartanLabel, int> m;
  for (const auto& c : components) ++m[c.label];
  return m;
}

std::string SubsystemReport::str() const {
  // keep the component order chosen above, grouping equal labels
  std::string out;
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j].label == components[i].label) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += components[i].label.str();
    i = j;
  }
  return out;
}

std::map<CartanLabel, int> parse_component_list(const std::string& text) {
  std::map<CartanLabel, int> out;
  std::string clean;
  for (char c : text)
    if (c != '(' && c != ')' && c != '\'' && !std::isspace(static_cast<unsigned char>(c))) clean += c;
  if (clean.empty() || clean == "empty") return out;
  std::size_t start = 0;
  while (start <= clean.size()) {
    std::size_t end = clean.find('+', start);
    std::string term = clean.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t i = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    int mult = i > 0 ? std::stoi(term.substr(0, i)) : 1;
    out[parse_cartan_label(term.substr(i))] += mult;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::string format_component_list(const std::map<CartanLabel, int>& components) {
  std::vector<std::pair<CartanLabel, int>> v(components.begin(), components.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    if (x.first.rank != y.first.rank) return x.first.rank > y.first.rank;
    if (x.first.family != y.first.family) return x.first.family > y.first.family;
    return x.first.isShort > y.first.isShort;
  });
  std::string out;
  for (const auto& [l, m] : v) {
    if (m == 0) continue;
    if (!out.empty()) out += '+';
    if (m > 1) out += std::to_string(m);
    out += l.str();
  }
  return out;
}

int positive_root_count(const std::map<CartanLabel, int>& components) {
  int total = 0;
  for (const auto& [l, m] : components) total += m * root_count(l.family, l.rank) / 2;
  return total;
}

}  // namespace thetaorb
