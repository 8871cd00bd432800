#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "settune/error.hpp"
#include "settune/frequency_set.hpp"
#include "settune/io/format.hpp"
#include "settune/note.hpp"
#include "settune/tuning.hpp"
#include "settune/version.hpp"

namespace settune::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view document_format = "settune-tuning";
inline constexpr int document_format_version = 1;

/// A tuning table together with its serialisation options. The exact "p/q"
/// fields are authoritative; decimal fields are recomputed on every export.
struct TuningDocument {
  TuningTable table;
  bool note_annotations = true;
  std::string tool_version{version};
};

/// Note heard for entry t: the lowest partial of tG, if it is nameable.
inline std::optional<NoteName> entry_note(const TuningTable& table, const Interval& t) {
  const Ratio f = table.complement.min() * t.value();
  try {
    return note_name(f);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

namespace detail {

inline Json set_json(const FrequencySet& set) {
  Json arr = Json::array();
  for (const auto& f : set) arr.push_back(f.str());
  return arr;
}

inline const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError("document is missing field", key);
  return obj.at(key);
}

inline std::string string_member(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_string()) throw ParseError("document field must be a string", key);
  return v.get<std::string>();
}

inline std::size_t count_member(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_number_unsigned()) throw ParseError("document field must be a non-negative integer", key);
  return v.get<std::size_t>();
}

inline FrequencySet set_member(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_array()) throw ParseError("document field must be an array", key);
  std::vector<Ratio> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw ParseError("set element must be a \"p/q\" string", key);
    out.push_back(Ratio::parse(item.get<std::string>()));
  }
  FrequencySet set(out);
  if (set.size() != out.size()) throw ParseError("set contains duplicates", key);
  return set;
}

}  // namespace detail

inline Json to_json_value(const TuningDocument& doc) {
  const TuningTable& t = doc.table;
  Json params = Json::object();
  const auto& p = t.parameters;
  if (p.threshold) params["h"] = p.threshold->str();
  if (p.bounds) {
    params["lo"] = p.bounds->lo.str();
    params["hi"] = p.bounds->hi.str();
    params["max_den"] = p.bounds->max_den;
  }
  if (p.context_extra) params["n"] = *p.context_extra;
  if (p.complement_extra) params["m"] = *p.complement_extra;

  Json meta = Json::object();
  meta["generator"] = std::string(to_string(t.generator));
  meta["tool_version"] = doc.tool_version;
  meta["context"] = detail::set_json(t.context);
  meta["complementary"] = detail::set_json(t.complement);
  meta["context_descriptor"] = describe(t);
  meta["parameters"] = params;
  meta["octave_reduced"] = t.octave_reduced;
  meta["note_annotations"] = doc.note_annotations;
  meta["entry_count"] = t.entries.size();

  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json row = Json::object();
    row["interval"] = e.interval.str();
    row["cents"] = display_cents(e.interval);
    row["affinity"] = e.score.affinity().str();
    row["harmonicity"] = e.score.harmonicity().str();
    row["total"] = e.score.total().str();
    row["affinity_decimal"] = display_consonance(e.score.affinity());
    row["harmonicity_decimal"] = display_consonance(e.score.harmonicity());
    row["total_decimal"] = display_consonance(e.score.total());
    if (doc.note_annotations) {
      if (auto n = entry_note(t, e.interval)) row["note"] = n->str();
    }
    entries.push_back(std::move(row));
  }

  Json out = Json::object();
  out["format"] = std::string(document_format);
  out["format_version"] = document_format_version;
  out["metadata"] = std::move(meta);
  out["entries"] = std::move(entries);
  return out;
}

/// Canonical text: fixed field order, 2-space indent, trailing newline.
inline std::string to_json(const TuningDocument& doc) { return to_json_value(doc).dump(2) + "\n"; }

/// Reads a document back. Only exact fields are consulted; the rebuilt table
/// must pass validate() including a full rescore against F and G.
inline TuningDocument parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON (" + std::string(e.what()) + ")", std::string(text.substr(0, 40)));
  }
  if (detail::string_member(root, "format") != document_format) {
    throw ParseError("not a tuning document", detail::string_member(root, "format"));
  }
  if (detail::count_member(root, "format_version") != static_cast<std::size_t>(document_format_version)) {
    throw ParseError("unsupported document version", "format_version");
  }

  const Json& meta = detail::member(root, "metadata");
  TuningDocument doc;
  doc.tool_version = detail::string_member(meta, "tool_version");
  TuningTable& t = doc.table;
  t.generator = parse_generator(detail::string_member(meta, "generator"));
  t.context = detail::set_member(meta, "context");
  t.complement = detail::set_member(meta, "complementary");
  const Json& octave = detail::member(meta, "octave_reduced");
  const Json& notes = detail::member(meta, "note_annotations");
  if (!octave.is_boolean() || !notes.is_boolean()) throw ParseError("flag must be boolean", "metadata");
  t.octave_reduced = octave.get<bool>();
  doc.note_annotations = notes.get<bool>();

  const Json& params = detail::member(meta, "parameters");
  if (!params.is_object()) throw ParseError("parameters must be an object", "parameters");
  if (params.contains("h")) t.parameters.threshold = Ratio::parse(detail::string_member(params, "h"));
  if (params.contains("lo") || params.contains("hi") || params.contains("max_den")) {
    t.parameters.bounds = EnumerationBounds{Interval::parse(detail::string_member(params, "lo")),
                                            Interval::parse(detail::string_member(params, "hi")),
                                            detail::count_member(params, "max_den")};
  }
  if (params.contains("n")) t.parameters.context_extra = detail::count_member(params, "n");
  if (params.contains("m")) t.parameters.complement_extra = detail::count_member(params, "m");

  const Json& entries = detail::member(root, "entries");
  if (!entries.is_array()) throw ParseError("entries must be an array", "entries");
  for (const auto& row : entries) {
    const Interval interval = Interval::parse(detail::string_member(row, "interval"));
    ConsonanceScore score(Ratio::parse(detail::string_member(row, "affinity")),
                          Ratio::parse(detail::string_member(row, "harmonicity")));
    if (!(score.total() == Ratio::parse(detail::string_member(row, "total")))) {
      throw InvariantError("total is not the mean of affinity and harmonicity at " + interval.str());
    }
    t.entries.push_back(TuningEntry{interval, std::move(score)});
  }
  if (detail::count_member(meta, "entry_count") != t.entries.size()) {
    throw InvariantError("entry_count does not match the number of entries");
  }
  validate(t, /*rescore=*/true);
  return doc;
}

}  // namespace settune::io
