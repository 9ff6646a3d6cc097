#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace thetaorb {

enum class ClassicalType { A, B, C, D };

char to_char(ClassicalType t);
ClassicalType classical_type_from_char(char c);

// Weakly decreasing list of positive integers. Zero parts are dropped on
// construction, so (n^a b) with b = 0 is simply (n^a).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  // i-th part, or 0 past the end
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  int multiplicity(int part) const;

  auto operator<=>(const Partition&) const = default;

  std::string str() const;  // "(3,3,1)"

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// (part^count) as a vector, convenience for closed forms
std::vector<int> repeat(int part, int count);

Partition transpose(const Partition& p);
bool is_valid(const Partition& p, ClassicalType t, int ambientSize);
bool is_valid(const Partition& p, ClassicalType t);  // size taken from p: odd for B, even for C, D

// Dominance on padded prefix sums; for partitions of different sizes this
// compares the padded sequences (used by the test oracles only).
bool dominates(const Partition& p, const Partition& q);
Partition union_of(const Partition& p, const Partition& q);
std::vector<std::pair<int, int>> multiplicities(const Partition& p);

// Largest t-valid partition dominated by p.  Throws std::invalid_argument if
// the size has the wrong parity for t (odd for B, even for C and D).
Partition collapse(const Partition& p, ClassicalType t);
// Smallest t-valid partition dominating p.
Partition expansion(const Partition& p, ClassicalType t);

// add a box to the first row / remove a box from the last row
Partition plus_box(const Partition& p);
Partition minus_box(const Partition& p);

// 𝔄(p, x): multiplicities of parts p_i > x with p_i - x + 1 even.
// 𝔅(p, x): the same over parts p_i < x.  x must be a part of p.
int frak_A(const Partition& p, int part);
int frak_B(const Partition& p, int part);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions of n with every part <= maxPart.
std::vector<Partition> partitions_of(int n, int maxPart);

Partition parse_partition(const std::string& text);  // "3,3,1" or "(3,3,1)"

}  // namespace thetaorb
