#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicut {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// Fixed-universe set of dense ids. The tag keeps vertex sets and edge sets
/// from being mixed up.
template <class Tag>
class IdSet {
 public:
  using Bits = boost::dynamic_bitset<>;

  IdSet() = default;
  explicit IdSet(std::size_t universe) : bits_(universe) {}
  explicit IdSet(Bits bits) : bits_(std::move(bits)) {}

  static IdSet full(std::size_t universe) {
    IdSet s(universe);
    s.bits_.set();
    return s;
  }

  template <class Range>
  static IdSet of(std::size_t universe, const Range& ids) {
    IdSet s(universe);
    for (auto id : ids) s.insert(static_cast<std::uint32_t>(id));
    return s;
  }

  static IdSet of(std::size_t universe, std::initializer_list<std::uint32_t> ids) {
    IdSet s(universe);
    for (auto id : ids) s.insert(id);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }
  bool contains(std::uint32_t id) const { return id < bits_.size() && bits_.test(id); }

  void insert(std::uint32_t id) { bits_.set(id); }
  void erase(std::uint32_t id) { bits_.reset(id); }

  bool intersects(const IdSet& o) const { return bits_.intersects(o.bits_); }
  bool subset_of(const IdSet& o) const { return bits_.is_subset_of(o.bits_); }

  IdSet complement() const { return IdSet(~bits_); }
  IdSet& operator&=(const IdSet& o) { bits_ &= o.bits_; return *this; }
  IdSet& operator|=(const IdSet& o) { bits_ |= o.bits_; return *this; }
  IdSet& operator-=(const IdSet& o) { bits_ -= o.bits_; return *this; }
  friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
  friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }
  friend IdSet operator-(IdSet a, const IdSet& b) { return a -= b; }

  /// Smallest member, or universe() when empty.
  std::size_t first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? bits_.size() : p;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto p = bits_.find_first(); p != Bits::npos; p = bits_.find_next(p))
      fn(static_cast<std::uint32_t>(p));
  }

  std::vector<std::uint32_t> ids() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for_each([&](std::uint32_t id) { out.push_back(id); });
    return out;
  }

  const Bits& bits() const { return bits_; }

  friend bool operator==(const IdSet& a, const IdSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const IdSet& a, const IdSet& b) { return !(a == b); }

  /// Lexicographic order on the sorted member lists.
  friend bool operator<(const IdSet& a, const IdSet& b) {
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != Bits::npos && j != Bits::npos) {
      if (i != j) return i < j;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    return i == Bits::npos && j != Bits::npos;
  }

 private:
  Bits bits_;
};

struct VertexTag {};
struct EdgeTag {};
using VertexSet = IdSet<VertexTag>;
using EdgeSet = IdSet<EdgeTag>;

// Errors. Everything thrown by the library derives from Error.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("CapExceeded: more than " + std::to_string(cap) + " objects"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what)
      : Error("PreconditionViolated: " + what) {}
};

class DualityGapDetected : public Error {
 public:
  DualityGapDetected(std::size_t dijoin, std::size_t packing)
      : Error("DualityGapDetected: min dijoin " + std::to_string(dijoin) +
              " != max packing " + std::to_string(packing)),
        dijoin_(dijoin),
        packing_(packing) {}
  std::size_t dijoin_size() const { return dijoin_; }
  std::size_t packing_size() const { return packing_; }

 private:
  std::size_t dijoin_;
  std::size_t packing_;
};

class NotCornerClosed : public Error {
 public:
  explicit NotCornerClosed(const std::string& what) : Error("NotCornerClosed: " + what) {}
};

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& condition)
      : Error("VerificationFailed: " + condition), condition_(condition) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("ParseError at line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace dicut

template <class Tag>
struct std::hash<dicut::IdSet<Tag>> {
  std::size_t operator()(const dicut::IdSet<Tag>& s) const noexcept {
    return std::hash<typename dicut::IdSet<Tag>::Bits>{}(s.bits());
  }
};
