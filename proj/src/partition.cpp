#include "thetaorb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetaorb {

char to_char(ClassicalType t) {
  switch (t) {
    case ClassicalType::A: return 'A';
    case ClassicalType::B: return 'B';
    case ClassicalType::C: return 'C';
    case ClassicalType::D: return 'D';
  }
  return '?';
}

ClassicalType classical_type_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return ClassicalType::A;
    case 'B': return ClassicalType::B;
    case 'C': return ClassicalType::C;
    case 'D': return ClassicalType::D;
  }
  throw std::invalid_argument(std::string("unknown classical type '") + c + "'");
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  for (int x : parts) {
    if (x < 0) throw std::invalid_argument("negative part in partition");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<int> repeat(int part, int count) {
  if (count < 0) throw std::invalid_argument("negative repeat count");
  return std::vector<int>(static_cast<std::size_t>(count), part);
}

Partition transpose(const Partition& p) {
  std::vector<int> t;
  if (p.empty()) return Partition();
  t.reserve(static_cast<std::size_t>(p[0]));
  for (int j = 1; j <= p[0]; ++j) {
    int c = 0;
    for (int x : p.parts()) {
      if (x >= j) ++c;
      else break;
    }
    t.push_back(c);
  }
  return Partition(std::move(t));
}

namespace {

// the parts that must come with even multiplicity
bool constrained(int part, ClassicalType t) {
  switch (t) {
    case ClassicalType::A: return false;
    case ClassicalType::B:
    case ClassicalType::D: return part % 2 == 0;
    case ClassicalType::C: return part % 2 == 1;
  }
  return false;
}

void check_parity(int size, ClassicalType t) {
  if (t == ClassicalType::B && size % 2 == 0)
    throw std::invalid_argument("type B needs a partition of odd size");
  if ((t == ClassicalType::C || t == ClassicalType::D) && size % 2 != 0)
    throw std::invalid_argument(std::string("type ") + to_char(t) + " needs a partition of even size");
}

}  // namespace

bool is_valid(const Partition& p, ClassicalType t, int ambientSize) {
  return p.size() == ambientSize && is_valid(p, t);
}

bool is_valid(const Partition& p, ClassicalType t) {
  if (t == ClassicalType::B && p.size() % 2 != 1) return false;
  if ((t == ClassicalType::C || t == ClassicalType::D) && p.size() % 2 != 0) return false;
  for (auto [part, mult] : multiplicities(p)) {
    if (constrained(part, t) && mult % 2 != 0) return false;
  }
  return true;
}

bool dominates(const Partition& p, const Partition& q) {
  int n = std::max(p.length(), q.length());
  int sp = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp < sq) return false;
  }
  return true;
}

Partition union_of(const Partition& p, const Partition& q) {
  std::vector<int> v = p.parts();
  v.insert(v.end(), q.parts().begin(), q.parts().end());
  return Partition(std::move(v));
}

std::vector<std::pair<int, int>> multiplicities(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int x : p.parts()) {
    if (!out.empty() && out.back().first == x) ++out.back().second;
    else out.emplace_back(x, 1);
  }
  return out;
}

// Greedy repair: take the largest offending part q (constrained, odd
// multiplicity), lower its last copy by one and raise the first later part
// that is smaller than q - 1 by one (appending a 1 when there is none).
Partition collapse(const Partition& p, ClassicalType t) {
  if (t == ClassicalType::A) return p;
  check_parity(p.size(), t);
  std::vector<int> v = p.parts();
  for (;;) {
    Partition cur(v);
    int bad = -1;
    for (auto [part, mult] : multiplicities(cur)) {
      if (constrained(part, t) && mult % 2 != 0) {
        bad = part;
        break;
      }
    }
    if (bad < 0) return cur;
    v = cur.parts();
    std::size_t last = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == bad) last = i;
    v[last] -= 1;
    std::size_t j = last + 1;
    while (j < v.size() && v[j] >= bad - 1) ++j;
    if (j < v.size()) v[j] += 1;
    else v.push_back(1);
  }
}

// The smallest valid partition dominating p need not exist, and the set of
// minimal ones can have several elements.  We search upward from p through
// invalid partitions only (every minimal valid element is reachable that
// way, since a dominance cover chain to it cannot pass a valid partition)
// and return the unique minimal element found.
Partition expansion(const Partition& p, ClassicalType t) {
  if (t == ClassicalType::A) return p;
  check_parity(p.size(), t);
  if (is_valid(p, t)) return p;

  std::set<std::vector<int>> seen{p.parts()};
  std::vector<std::vector<int>> frontier{p.parts()};
  std::vector<Partition> found;
  constexpr std::size_t kLimit = 2'000'000;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier) {
      // move one box from row j up to row i (i < j), keeping the shape
      std::vector<int> w = v;
      w.push_back(0);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && w[i - 1] == w[i]) continue;  // only the first row of a block may grow
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          if (w[j] == 0) break;
          if (j + 1 < w.size() && w[j + 1] == w[j]) continue;  // only the last row of a block may shrink
          std::vector<int> u = w;
          ++u[i];
          --u[j];
          Partition q(u);
          if (!seen.insert(q.parts()).second) continue;
          if (seen.size() > kLimit) throw std::runtime_error("expansion search exceeded its budget");
          if (is_valid(q, t)) found.push_back(q);
          else next.push_back(q.parts());
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Partition> minimal;
  for (const auto& q : found) {
    bool isMin = true;
    for (const auto& r : found)
      if (r != q && dominates(q, r)) {
        isMin = false;
        break;
      }
    if (isMin) minimal.push_back(q);
  }
  if (minimal.size() != 1) {
    std::ostringstream os;
    os << "no unique smallest " << to_char(t) << "-valid partition dominates " << p.str() << " ("
       << minimal.size() << " minimal candidates)";
    throw std::domain_error(os.str());
  }
  return minimal.front();
}

Partition plus_box(const Partition& p) {
  std::vector<int> v = p.parts();
  if (v.empty()) v.push_back(1);
  else ++v.front();
  return Partition(std::move(v));
}

Partition minus_box(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("cannot remove a box from the empty partition");
  std::vector<int> v = p.parts();
  --v.back();
  return Partition(std::move(v));
}

namespace {
int frak(const Partition& p, int part, bool above) {
  if (p.multiplicity(part) == 0)
    throw std::invalid_argument(std::to_string(part) + " is not a part of " + p.str());
  int total = 0;
  for (auto [q, mult] : multiplicities(p)) {
    bool side = above ? q > part : q < part;
    if (side && (q - part + 1) % 2 == 0) total += mult;
  }
  return total;
}
}  // namespace

int frak_A(const Partition& p, int part) { return frak(p, part, true); }
int frak_B(const Partition& p, int part) { return frak(p, part, false); }

std::vector<Partition> partitions_of(int n, int maxPart) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int bound) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, bound); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, maxPart);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument("bad partition entry '" + tok + "'");
    parts.push_back(v);
    tok.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') tok += c;
    else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') flush();
    else throw std::invalid_argument(std::string("unexpected character '") + c + "' in partition");
  }
  flush();
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  return Partition(std::move(parts));
}

}  // namespace thetaorb
