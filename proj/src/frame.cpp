#include "lowprob/frame.hpp"

#include <bit>
#include <stdexcept>

#include "lowprob/errors.hpp"

namespace lowprob {

Event::Event(std::uint32_t mask, std::size_t frame_size)
    : mask_(mask), size_(static_cast<std::uint32_t>(frame_size)) {
  if (frame_size > kMaxFrameSize) throw TooLarge("event frame exceeds 20 outcomes");
  if ((mask & ~full_mask(frame_size)) != 0) throw std::out_of_range("event member outside frame");
}

Event Event::full(std::size_t frame_size) { return Event(full_mask(frame_size), frame_size); }

Event Event::singleton(std::size_t index, std::size_t frame_size) {
  if (index >= frame_size) throw std::out_of_range("outcome index outside frame");
  return Event(std::uint32_t{1} << index, frame_size);
}

std::size_t Event::cardinality() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::optional<std::string> label_problem(std::string_view label) {
  if (label.empty()) return "empty outcome label";
  for (char c : label) {
    if (c == ',' || c == '{' || c == '}' || c == '=' || c == '#' ||
        c == ' ' || c == '\t' || c == '\n' || c == '\r')
      return "outcome label '" + std::string(label) + "' contains a reserved character";
  }
  if (label == "OMEGA") return "outcome label 'OMEGA' is reserved";
  return std::nullopt;
}

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("frame needs at least one outcome");
  if (labels_.size() > kMaxFrameSize) throw TooLarge("frame exceeds 20 outcomes");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (auto problem = label_problem(labels_[i])) throw std::invalid_argument(*problem);
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate outcome label '" + labels_[i] + "'");
  }
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Event Frame::event_of(std::initializer_list<std::string_view> labels) const {
  std::uint32_t mask = 0;
  for (auto l : labels) {
    auto idx = index_of(l);
    if (!idx) throw std::invalid_argument("unknown outcome label '" + std::string(l) + "'");
    mask |= std::uint32_t{1} << *idx;
  }
  return Event(mask, size());
}

Event parse_event(const Frame& frame, std::string_view text) {
  if (text == "OMEGA") return frame.full_event();
  if (text.size() < 2 || text.front() != '{')
    throw ParseError("event literal must start with '{' or be OMEGA", 0, 0);
  if (text.back() != '}')
    throw ParseError("event literal must end with '}'", 0, text.size() - 1);
  std::uint32_t mask = 0;
  if (text.size() == 2) return Event(0, frame.size());
  std::size_t start = 1;
  while (start < text.size()) {
    std::size_t end = start;
    while (end < text.size() - 1 && text[end] != ',' && text[end] != '{' && text[end] != '}') ++end;
    if (end < text.size() - 1 && text[end] != ',')
      throw ParseError("unexpected '" + std::string(1, text[end]) + "' inside event literal", 0, end);
    const auto label = text.substr(start, end - start);
    if (label.empty()) throw ParseError("empty label in event literal", 0, start);
    auto idx = frame.index_of(label);
    if (!idx) throw ParseError("unknown outcome label '" + std::string(label) + "'", 0, start);
    const std::uint32_t bit = std::uint32_t{1} << *idx;
    if (mask & bit) throw ParseError("duplicate outcome label '" + std::string(label) + "'", 0, start);
    mask |= bit;
    start = end + 1;
  }
  return Event(mask, frame.size());
}

std::string render(const Frame& frame, const Event& e) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!e.contains(i)) continue;
    if (!first) out += ',';
    out += frame.label(i);
    first = false;
  }
  out += '}';
  return out;
}

std::vector<std::uint32_t> canonical_masks(std::size_t n) {
  if (n > kMaxFrameSize) throw TooLarge("frame too large for exhaustive event enumeration");
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << n);
  out.push_back(0);
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack: successive masks with k bits in increasing order.
    std::uint32_t m = (std::uint32_t{1} << k) - 1U;
    while (m < limit) {
      out.push_back(m);
      const std::uint32_t c = m & (~m + 1U);
      const std::uint32_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return out;
}

std::vector<Event> all_events(const Frame& frame) {
  std::vector<Event> out;
  const auto masks = canonical_masks(frame.size());
  out.reserve(masks.size());
  for (auto m : masks) out.emplace_back(m, frame.size());
  return out;
}

}  // namespace lowprob
