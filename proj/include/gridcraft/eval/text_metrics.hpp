#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gridcraft/io.hpp"

namespace gridcraft::eval {

using Tokens = std::vector<std::string>;

/// ASCII letters are lowercased; a token is a maximal run of [a-z0-9]; every other byte
/// (whitespace, punctuation, non-ASCII) separates tokens.
Tokens tokenize(std::string_view text);

/// Corpus BLEU-n (1 <= n <= 4): uniform-weight geometric mean of clipped n-gram precisions
/// for orders 1..n, times the brevity penalty exp(1 - r/c) when c <= r. Zero when any
/// precision is zero or the candidates are empty.
/// Throws EmptyCorpus for no pairs, std::invalid_argument for mismatched sizes or n.
double bleu(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references, int n);

/// Mean of per-pair BLEU-n.
double sentence_bleu(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references, int n);

enum class KeywordCategory { All, Colors, Spatial, Dialog };
inline constexpr std::array<KeywordCategory, 4> kKeywordCategories = {
    KeywordCategory::All, KeywordCategory::Colors, KeywordCategory::Spatial, KeywordCategory::Dialog};

std::string to_string(KeywordCategory c);

class KeywordLexicon {
 public:
  /// Throws std::invalid_argument when a set is empty, or a word is not a single token or
  /// appears in two sets.
  KeywordLexicon(std::set<std::string> colors, std::set<std::string> spatial, std::set<std::string> dialog);

  static KeywordLexicon defaults();
  /// {"colors": [...], "spatial": [...], "dialog": [...]}
  static KeywordLexicon from_json(const Json& j);
  static KeywordLexicon load(const std::filesystem::path& path);

  bool contains(KeywordCategory category, const std::string& token) const;
  std::set<std::string> words(KeywordCategory category) const;

 private:
  std::set<std::string> colors_;
  std::set<std::string> spatial_;
  std::set<std::string> dialog_;
};

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  bool precision_undefined = false;  ///< no keywords in the candidates
  bool recall_undefined = false;     ///< no keywords in the references
};

/// Keyword counts are clipped per pair, summed over the corpus. An undefined side reports 0.
/// Throws EmptyCorpus, std::invalid_argument for mismatched sizes.
PrecisionRecall keyword_pr(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references,
                           const KeywordLexicon& lexicon, KeywordCategory category);

struct ArchitectScores {
  std::array<double, 4> bleu{};                ///< BLEU-1..4
  std::array<PrecisionRecall, 4> keywords{};   ///< indexed like kKeywordCategories
  int pairs = 0;
};

struct ArchitectRow {
  std::string context_id;
  std::string candidate;
  std::string reference;
};

/// Tab-separated context-id, candidate, reference. A first line "context_id\tcandidate\treference"
/// is skipped. Throws ParseError with the line number on a malformed row.
std::vector<ArchitectRow> read_architect_tsv(std::istream& in);

ArchitectScores score_architect(const std::vector<ArchitectRow>& rows, const KeywordLexicon& lexicon,
                                bool sentence_level = false);

Json to_json(const ArchitectScores& scores);

}  // namespace gridcraft::eval
