#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "settune/error.hpp"
#include "settune/frequency_set.hpp"
#include "settune/note.hpp"
#include "settune/ratio.hpp"

namespace settune::io {

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '{') ++depth;
    if (text[i] == '}' && depth > 0) --depth;
    if (text[i] == sep && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

inline Ratio positive_number(std::string_view token) {
  Ratio r = Ratio::parse(token);
  if (r.sign() <= 0) throw ParseError("expected a positive number", std::string(token));
  return r;
}

inline std::vector<Ratio> number_list(std::string_view text) {
  std::vector<Ratio> out;
  for (auto item : split(text, ',')) out.push_back(positive_number(item));
  return out;
}

/// One '*'-separated factor that denotes a set; nullopt if it is a plain number.
inline std::optional<FrequencySet> set_factor(std::string_view factor) {
  const std::string token(factor);
  if (factor.empty()) throw ParseError("empty factor in set expression", token);
  if (factor.front() == '{') {
    if (factor.back() != '}' || factor.size() < 3) throw ParseError("unterminated set literal", token);
    return FrequencySet(number_list(factor.substr(1, factor.size() - 2)));
  }
  if (factor.front() == 'N') {
    auto digits = factor.substr(1);
    if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
    if (!settune::detail::all_digits(digits) || digits == std::string_view("0") || digits.front() == '0') {
      throw ParseError("malformed harmonic set N_k", token);
    }
    return harmonic_set(Ratio(1), std::stoul(std::string(digits)));
  }
  if (factor.front() >= 'A' && factor.front() <= 'G') {
    const auto at = factor.find('@');
    const NoteName name = NoteName::parse(factor.substr(0, at));
    if (!name.partials()) throw ParseError("note needs a partial count, e.g. C4_6", token);
    if (at == std::string_view::npos) return note_set(name);
    return note_set(name, positive_number(factor.substr(at + 1)));
  }
  return std::nullopt;
}

inline FrequencySet term(std::string_view text) {
  const std::string token(text);
  if (text.empty()) throw ParseError("empty term in set expression", token);
  const auto factors = split(text, '*');
  if (factors.size() == 1 && text.front() != '{' && text.find(',') != std::string_view::npos) {
    return FrequencySet(number_list(text));
  }
  Ratio scale(1);
  std::optional<FrequencySet> set;
  for (auto f : factors) {
    if (auto s = set_factor(f)) {
      if (set) throw ParseError("term multiplies two sets", token);
      set = std::move(s);
    } else {
      scale *= positive_number(f);
    }
  }
  if (!set) return FrequencySet{scale};
  return transpose(*set, Interval(scale));
}

}  // namespace detail

/// Parses a frequency-set expression: terms joined by '+' (set union).
///
///   262,524,786          explicit list
///   262*N6, 262*N_6      harmonic set f * N_k
///   262*{1,2.76,5.41}    scaled list
///   C4_6@262, A2_4       note set, optionally with its reference frequency
///   3/2*C4_6@262         any set scaled by a number
inline FrequencySet parse_set_expression(std::string_view text) {
  FrequencySet out;
  bool first = true;
  for (auto t : detail::split(text, '+')) {
    FrequencySet s = detail::term(t);
    out = first ? std::move(s) : set_union(out, s);
    first = false;
  }
  return out;
}

}  // namespace settune::io
