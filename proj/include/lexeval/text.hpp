#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lexeval {

enum class NormalizationPolicy {
  Default,  // strip surrounding punctuation, fold case
  Exact,    // identity
};

std::string_view to_string(NormalizationPolicy policy);
NormalizationPolicy parse_normalization_policy(std::string_view name);

// Decodes UTF-8 into Unicode scalar values. Each byte of an ill-formed
// sequence becomes U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

bool is_space(char32_t cp);
bool is_punctuation(char32_t cp);
bool is_ascii_alnum(char32_t cp);

// Simple one-to-one lowercase mapping for ASCII, Latin-1, Greek and Cyrillic.
char32_t fold_case(char32_t cp);

std::vector<std::string> split_whitespace(std::string_view text);

// May return an empty string; callers drop empty tokens.
std::string normalize_token(std::string_view raw, NormalizationPolicy policy);

// split_whitespace followed by normalize_token, empty results removed.
std::vector<std::string> tokenize(std::string_view text, NormalizationPolicy policy);

}  // namespace lexeval
