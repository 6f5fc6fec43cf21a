#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lowprob/frame.hpp"
#include "lowprob/rational.hpp"

namespace lowprob {

/// Dense table of one Rational per event, indexed by event mask.
class SetFunction {
 public:
  /// All values zero.
  explicit SetFunction(Frame frame);
  SetFunction(Frame frame, std::vector<Rational> values);

  const Frame& frame() const { return *frame_; }
  std::shared_ptr<const Frame> frame_ptr() const { return frame_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator[](const Event& e) const { return values_[e.mask()]; }
  const Rational& at_mask(std::uint32_t mask) const { return values_.at(mask); }
  void set(const Event& e, Rational v) { values_.at(e.mask()) = std::move(v); }

  std::span<const Rational> values() const { return values_; }
  std::vector<Rational>& mutable_values() { return values_; }

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.frame() == b.frame() && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const Frame> frame_;
  std::vector<Rational> values_;
};

/// A probability mass function on a frame: non-negative masses summing to 1.
class Distribution {
 public:
  /// Throws std::invalid_argument on a negative mass or a total other than 1.
  Distribution(Frame frame, std::vector<Rational> masses);

  const Frame& frame() const { return *frame_; }
  std::shared_ptr<const Frame> frame_ptr() const { return frame_; }
  std::span<const Rational> masses() const { return masses_; }
  const Rational& mass(std::size_t outcome) const { return masses_.at(outcome); }
  Rational prob(const Event& e) const;

  /// prob(A) for every event, indexed by mask.
  std::vector<Rational> event_table() const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.frame() == b.frame() && a.masses_ == b.masses_;
  }

 private:
  std::shared_ptr<const Frame> frame_;
  std::vector<Rational> masses_;
};

/// Normalized, super-additive set function; upper values by conjugacy.
///
/// Instances produced by the library's own constructions are valid by
/// construction. `from` checks the axioms; `unchecked` wraps raw data as-is,
/// which is what the credal routines need to report empty constraint sets.
class LowerProbability {
 public:
  /// Throws std::invalid_argument listing the first violations.
  static LowerProbability from(SetFunction sf);
  static LowerProbability unchecked(SetFunction sf) { return LowerProbability(std::move(sf)); }

  static LowerProbability vacuous(const Frame& frame);
  static LowerProbability of(const Distribution& p);

  const Frame& frame() const { return sf_.frame(); }
  const SetFunction& function() const { return sf_; }
  const Rational& operator()(const Event& e) const { return sf_[e]; }
  const Rational& lower(const Event& e) const { return sf_[e]; }
  /// 1 - lower(complement(e)).
  Rational upper(const Event& e) const;

  friend bool operator==(const LowerProbability& a, const LowerProbability& b) { return a.sf_ == b.sf_; }

 private:
  explicit LowerProbability(SetFunction sf) : sf_(std::move(sf)) {}
  SetFunction sf_;
};

inline Rational upper(const LowerProbability& low, const Event& a) { return low.upper(a); }

/// Signed Möbius masses of a set function.
class MobiusMass {
 public:
  explicit MobiusMass(SetFunction masses) : m_(std::move(masses)) {}

  const Frame& frame() const { return m_.frame(); }
  const SetFunction& function() const { return m_; }
  const Rational& operator()(const Event& e) const { return m_[e]; }
  Rational total() const;

  friend bool operator==(const MobiusMass& a, const MobiusMass& b) { return a.m_ == b.m_; }

 private:
  SetFunction m_;
};

void require_same_frame(const Frame& a, const Frame& b, const char* what);

}  // namespace lowprob
