#include "gridcraft/eval/text_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>

#include "gridcraft/errors.hpp"

namespace gridcraft::eval {

namespace {

bool is_token_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

void check_corpus(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references) {
  if (candidates.size() != references.size()) {
    throw std::invalid_argument("candidate and reference lists differ in length");
  }
  if (candidates.empty()) throw EmptyCorpus("corpus has no sentence pairs");
}

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts ngrams(const Tokens& tokens, int n) {
  NgramCounts counts;
  const auto len = static_cast<int>(tokens.size());
  for (int i = 0; i + n <= len; ++i) ++counts[Tokens(tokens.begin() + i, tokens.begin() + i + n)];
  return counts;
}

struct OrderCounts {
  long matched = 0;
  long total = 0;
};

OrderCounts clipped(const Tokens& candidate, const Tokens& reference, int n) {
  OrderCounts out;
  const auto ref = ngrams(reference, n);
  for (const auto& [gram, count] : ngrams(candidate, n)) {
    out.total += count;
    const auto it = ref.find(gram);
    if (it != ref.end()) out.matched += std::min(count, it->second);
  }
  return out;
}

double combine(const std::array<OrderCounts, 4>& orders, int n, long cand_len, long ref_len) {
  if (cand_len == 0) return 0.0;
  double log_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    if (orders[k].matched == 0) return 0.0;
    log_sum += std::log(static_cast<double>(orders[k].matched) / static_cast<double>(orders[k].total));
  }
  const double bp = cand_len > ref_len ? 1.0 : std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(cand_len));
  return bp * std::exp(log_sum / n);
}

void check_order(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("BLEU order must be 1..4");
}

std::set<std::string> json_words(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("lexicon is missing \"") + key + "\"");
  return j.at(key).get<std::set<std::string>>();
}

std::set<std::string> normalized(const std::set<std::string>& words, const char* name) {
  if (words.empty()) throw std::invalid_argument(std::string("lexicon set ") + name + " is empty");
  std::set<std::string> out;
  for (const auto& w : words) {
    const auto t = tokenize(w);
    if (t.size() != 1) throw std::invalid_argument("lexicon entry \"" + w + "\" is not a single token");
    out.insert(t.front());
  }
  return out;
}

}  // namespace

Tokens tokenize(std::string_view text) {
  Tokens tokens;
  std::string current;
  for (const char raw : text) {
    const char c = lower(raw);
    if (is_token_char(c)) {
      current.push_back(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

double bleu(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references, int n) {
  check_order(n);
  check_corpus(candidates, references);
  std::array<OrderCounts, 4> orders{};
  long cand_len = 0;
  long ref_len = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    cand_len += static_cast<long>(candidates[i].size());
    ref_len += static_cast<long>(references[i].size());
    for (int k = 0; k < n; ++k) {
      const auto c = clipped(candidates[i], references[i], k + 1);
      orders[k].matched += c.matched;
      orders[k].total += c.total;
    }
  }
  return combine(orders, n, cand_len, ref_len);
}

double sentence_bleu(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references, int n) {
  check_order(n);
  check_corpus(candidates, references);
  double sum = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) sum += bleu({candidates[i]}, {references[i]}, n);
  return sum / static_cast<double>(candidates.size());
}

std::string to_string(KeywordCategory c) {
  switch (c) {
    case KeywordCategory::All: return "all";
    case KeywordCategory::Colors: return "colors";
    case KeywordCategory::Spatial: return "spatial";
    case KeywordCategory::Dialog: return "dialog";
  }
  return "all";
}

KeywordLexicon::KeywordLexicon(std::set<std::string> colors, std::set<std::string> spatial,
                               std::set<std::string> dialog)
    : colors_(normalized(colors, "colors")),
      spatial_(normalized(spatial, "spatial")),
      dialog_(normalized(dialog, "dialog")) {
  for (const auto& w : colors_) {
    if (spatial_.contains(w) || dialog_.contains(w)) throw std::invalid_argument("lexicon word \"" + w + "\" is in two sets");
  }
  for (const auto& w : spatial_) {
    if (dialog_.contains(w)) throw std::invalid_argument("lexicon word \"" + w + "\" is in two sets");
  }
}

KeywordLexicon KeywordLexicon::defaults() {
  return KeywordLexicon({"blue", "red", "green", "orange", "purple", "yellow"},
                        {"left", "right", "top", "bottom", "front", "behind", "above", "below", "next", "corner",
                         "row", "column", "tall", "wide", "middle", "center"},
                        {"yes", "no", "okay", "sorry", "done", "mistake", "great"});
}

KeywordLexicon KeywordLexicon::from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("lexicon must be a JSON object");
  return KeywordLexicon(json_words(j, "colors"), json_words(j, "spatial"), json_words(j, "dialog"));
}

KeywordLexicon KeywordLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon " + path.string());
  try {
    return from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

bool KeywordLexicon::contains(KeywordCategory category, const std::string& token) const {
  switch (category) {
    case KeywordCategory::Colors: return colors_.contains(token);
    case KeywordCategory::Spatial: return spatial_.contains(token);
    case KeywordCategory::Dialog: return dialog_.contains(token);
    case KeywordCategory::All: break;
  }
  return colors_.contains(token) || spatial_.contains(token) || dialog_.contains(token);
}

std::set<std::string> KeywordLexicon::words(KeywordCategory category) const {
  switch (category) {
    case KeywordCategory::Colors: return colors_;
    case KeywordCategory::Spatial: return spatial_;
    case KeywordCategory::Dialog: return dialog_;
    case KeywordCategory::All: break;
  }
  std::set<std::string> all = colors_;
  all.insert(spatial_.begin(), spatial_.end());
  all.insert(dialog_.begin(), dialog_.end());
  return all;
}

PrecisionRecall keyword_pr(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references,
                           const KeywordLexicon& lexicon, KeywordCategory category) {
  check_corpus(candidates, references);
  long matched = 0;
  long in_candidates = 0;
  long in_references = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::map<std::string, int> cand;
    std::map<std::string, int> ref;
    for (const auto& t : candidates[i]) {
      if (lexicon.contains(category, t)) ++cand[t];
    }
    for (const auto& t : references[i]) {
      if (lexicon.contains(category, t)) ++ref[t];
    }
    for (const auto& [word, count] : cand) {
      in_candidates += count;
      const auto it = ref.find(word);
      if (it != ref.end()) matched += std::min(count, it->second);
    }
    for (const auto& [word, count] : ref) in_references += count;
  }
  PrecisionRecall pr;
  pr.precision_undefined = in_candidates == 0;
  pr.recall_undefined = in_references == 0;
  if (!pr.precision_undefined) pr.precision = static_cast<double>(matched) / static_cast<double>(in_candidates);
  if (!pr.recall_undefined) pr.recall = static_cast<double>(matched) / static_cast<double>(in_references);
  return pr;
}

std::vector<ArchitectRow> read_architect_tsv(std::istream& in) {
  std::vector<ArchitectRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) {
      throw ParseError("expected 3 tab-separated fields, found " + std::to_string(fields.size()), number);
    }
    if (rows.empty() && number == 1 && fields[0] == "context_id" && fields[1] == "candidate" &&
        fields[2] == "reference") {
      continue;
    }
    rows.push_back({fields[0], fields[1], fields[2]});
  }
  return rows;
}

ArchitectScores score_architect(const std::vector<ArchitectRow>& rows, const KeywordLexicon& lexicon,
                                bool sentence_level) {
  std::vector<Tokens> candidates;
  std::vector<Tokens> references;
  for (const auto& r : rows) {
    candidates.push_back(tokenize(r.candidate));
    references.push_back(tokenize(r.reference));
  }
  ArchitectScores scores;
  scores.pairs = static_cast<int>(rows.size());
  for (int n = 1; n <= 4; ++n) {
    scores.bleu[n - 1] = sentence_level ? sentence_bleu(candidates, references, n) : bleu(candidates, references, n);
  }
  for (std::size_t c = 0; c < kKeywordCategories.size(); ++c) {
    scores.keywords[c] = keyword_pr(candidates, references, lexicon, kKeywordCategories[c]);
  }
  return scores;
}

Json to_json(const ArchitectScores& scores) {
  Json keywords = Json::object();
  for (std::size_t c = 0; c < kKeywordCategories.size(); ++c) {
    const auto& pr = scores.keywords[c];
    keywords[to_string(kKeywordCategories[c])] = {{"precision", pr.precision},
                                                 {"recall", pr.recall},
                                                 {"precision_undefined", pr.precision_undefined},
                                                 {"recall_undefined", pr.recall_undefined}};
  }
  return {{"bleu", {{"1", scores.bleu[0]}, {"2", scores.bleu[1]}, {"3", scores.bleu[2]}, {"4", scores.bleu[3]}}},
          {"keywords", keywords},
          {"pairs", scores.pairs}};
}

}  // namespace gridcraft::eval
