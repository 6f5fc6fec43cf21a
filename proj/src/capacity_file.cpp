#include "lowprob/capacity_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lowprob/capacity.hpp"
#include "lowprob/errors.hpp"

namespace lowprob {

const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Lower:
      return "lower";
    case EntryKind::Mobius:
      return "mobius";
    case EntryKind::Dist:
      return "dist";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// "key: value" or "key=value" for a header keyword.
bool header(std::string_view line, std::string_view key, std::string_view& value) {
  if (line.substr(0, key.size()) != key) return false;
  auto rest = trim(line.substr(key.size()));
  if (rest.empty() || (rest.front() != ':' && rest.front() != '=')) return false;
  value = trim(rest.substr(1));
  return true;
}

}  // namespace

CapacityFile parse_capacity_file(std::string_view text) {
  std::optional<Frame> frame;
  std::optional<EntryKind> kind;
  bool vacuous = false;
  std::vector<std::pair<Event, Rational>> entries;
  std::vector<std::size_t> lines;
  std::vector<std::size_t> seen;  // line of first entry per event mask, 0 if none
  std::size_t last_line = 0;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    last_line = lineno;
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

    std::string_view value;
    if (header(line, "frame", value)) {
      if (frame) throw ParseError("duplicate frame header", lineno);
      try {
        frame.emplace(split_ws(value));
      } catch (const std::exception& e) {
        throw ParseError(std::string("bad frame: ") + e.what(), lineno);
      }
      seen.assign(frame->event_count(), 0);
      continue;
    }
    if (header(line, "kind", value)) {
      if (kind) throw ParseError("duplicate kind header", lineno);
      if (value == "lower") kind = EntryKind::Lower;
      else if (value == "mobius") kind = EntryKind::Mobius;
      else if (value == "dist") kind = EntryKind::Dist;
      else throw ParseError("unknown kind '" + std::string(value) + "' (expected lower, mobius or dist)", lineno);
      continue;
    }
    if (header(line, "default", value)) {
      if (value != "vacuous") throw ParseError("unknown default '" + std::string(value) + "'", lineno);
      vacuous = true;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected '<event> = <rational>'", lineno, indent);
    if (!frame) throw ParseError("entry before frame header", lineno, indent);
    std::string literal;
    for (char ch : line.substr(0, eq))
      if (!std::isspace(static_cast<unsigned char>(ch))) literal += ch;
    Event ev;
    try {
      ev = parse_event(*frame, literal);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, indent + e.column());
    }
    const std::string rhs(trim(line.substr(eq + 1)));
    Rational v;
    try {
      v = Rational::parse(rhs);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational '" + rhs + "'", lineno, indent + eq + 1);
    }
    if (seen[ev.mask()] != 0)
      throw ParseError("duplicate entry for event " + render(*frame, ev) + " (first on line " +
                           std::to_string(seen[ev.mask()]) + ")",
                       lineno, indent);
    seen[ev.mask()] = lineno;
    entries.emplace_back(ev, std::move(v));
    lines.push_back(lineno);
  }

  if (!frame) throw ParseError("missing frame header", last_line);
  if (!kind) throw ParseError("missing kind header", last_line);
  if (vacuous && *kind != EntryKind::Lower) throw ParseError("default=vacuous applies to kind lower only", last_line);

  if (*kind != EntryKind::Lower) {
    Rational total;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& [ev, v] = entries[i];
      if (*kind == EntryKind::Dist && ev.cardinality() != 1)
        throw ParseError("dist entries must be singletons, got " + render(*frame, ev), lines[i]);
      if (*kind == EntryKind::Dist && v.sign() < 0)
        throw ParseError("negative probability mass on " + render(*frame, ev), lines[i]);
      if (*kind == EntryKind::Mobius && ev.is_empty() && !v.is_zero())
        throw ParseError("the empty event cannot carry Möbius mass", lines[i]);
      total += v;
    }
    if (total != Rational(1))
      throw ParseError("masses sum to " + total.str() + ", expected 1", last_line);
  } else if (!vacuous) {
    for (std::uint32_t mask = 1; mask + 1 < frame->event_count(); ++mask)
      if (seen[mask] == 0)
        throw ParseError("no value for event " + render(*frame, Event(mask, frame->size())) +
                             " (declare default=vacuous to fill with 0)",
                         last_line);
  }

  return {std::move(*frame), *kind, vacuous, std::move(entries), std::move(lines)};
}

CapacityFile load_capacity_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_capacity_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(e.line()) + ": " + e.what(), e.line(), e.column());
  }
}

SetFunction to_set_function(const CapacityFile& file) {
  const std::size_t n = file.frame.size();
  SetFunction sf(file.frame);
  switch (file.kind) {
    case EntryKind::Lower:
      sf.set(Event::full(n), Rational(1));
      for (const auto& [ev, v] : file.entries) sf.set(ev, v);
      return sf;
    case EntryKind::Mobius:
      for (const auto& [ev, v] : file.entries) sf.set(ev, v);
      return inverse_mobius(MobiusMass(std::move(sf)));
    case EntryKind::Dist:
      return LowerProbability::of(to_distribution(file)).function();
  }
  return sf;
}

LowerProbability to_lower(const CapacityFile& file) { return LowerProbability::from(to_set_function(file)); }

Distribution to_distribution(const CapacityFile& file) {
  if (file.kind != EntryKind::Dist) throw std::invalid_argument("file is not of kind dist");
  std::vector<Rational> mass(file.frame.size());
  for (const auto& [ev, v] : file.entries) mass[ev.members().front()] = v;
  return Distribution(file.frame, std::move(mass));
}

namespace {

std::string frame_header(const Frame& f) {
  std::string out = "frame:";
  for (const auto& l : f.labels()) out += " " + l;
  return out + "\n";
}

}  // namespace

std::string render_capacity_file(const SetFunction& values, EntryKind kind) {
  if (kind == EntryKind::Dist) throw std::invalid_argument("use render_distribution_file for kind dist");
  std::string out = frame_header(values.frame());
  out += std::string("kind: ") + to_string(kind) + "\n";
  for (const auto& e : all_events(values.frame())) {
    if (kind == EntryKind::Mobius && values[e].is_zero()) continue;
    out += render(values.frame(), e) + " = " + values[e].str() + "\n";
  }
  return out;
}

std::string render_distribution_file(const Distribution& p) {
  std::string out = frame_header(p.frame()) + "kind: dist\n";
  for (std::size_t i = 0; i < p.frame().size(); ++i)
    out += render(p.frame(), Event::singleton(i, p.frame().size())) + " = " + p.mass(i).str() + "\n";
  return out;
}

}  // namespace lowprob
