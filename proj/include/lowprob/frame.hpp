#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lowprob {

inline constexpr std::size_t kMaxFrameSize = 20;

/// Subset of a frame's outcomes. Bit i of the mask is outcome i.
class Event {
 public:
  Event() = default;
  Event(std::uint32_t mask, std::size_t frame_size);

  static Event empty(std::size_t frame_size) { return Event(0, frame_size); }
  static Event full(std::size_t frame_size);
  static Event singleton(std::size_t index, std::size_t frame_size);

  std::uint32_t mask() const { return mask_; }
  std::size_t frame_size() const { return size_; }
  std::size_t cardinality() const;
  bool contains(std::size_t index) const { return (mask_ >> index) & 1U; }
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == full_mask(size_); }
  bool subset_of(const Event& other) const { return (mask_ & ~other.mask_) == 0; }
  std::vector<std::size_t> members() const;

  Event complement() const { return Event(~mask_ & full_mask(size_), size_); }
  Event operator&(const Event& o) const { return Event(mask_ & o.mask_, size_); }
  Event operator|(const Event& o) const { return Event(mask_ | o.mask_, size_); }
  Event operator-(const Event& o) const { return Event(mask_ & ~o.mask_, size_); }

  friend bool operator==(const Event&, const Event&) = default;

  static std::uint32_t full_mask(std::size_t n) {
    return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1U);
  }

 private:
  std::uint32_t mask_ = 0;
  std::uint32_t size_ = 0;
};

inline Event complement(const Event& e) { return e.complement(); }

/// Ordered finite outcome space with unique labels.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Number of events, 2^size.
  std::size_t event_count() const { return std::size_t{1} << labels_.size(); }
  Event empty_event() const { return Event::empty(size()); }
  Event full_event() const { return Event::full(size()); }
  Event event_of(std::initializer_list<std::string_view> labels) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Checks label syntax; returns an explanation when the label is unusable.
std::optional<std::string> label_problem(std::string_view label);

/// Parses `{a,b}`, `{}` or `OMEGA`. Throws ParseError with the column of the
/// offending character.
Event parse_event(const Frame& frame, std::string_view text);

/// Brace form with members in outcome order; `{}` for the empty event.
std::string render(const Frame& frame, const Event& e);

/// All 2^n event masks, ascending cardinality then ascending mask.
std::vector<std::uint32_t> canonical_masks(std::size_t frame_size);
std::vector<Event> all_events(const Frame& frame);

}  // namespace lowprob
