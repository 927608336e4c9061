#ifndef HN_PARSE_HPP_
#define HN_PARSE_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hn/word.hpp"

namespace hn {

// Two interchangeable word syntaxes:
//  - compact: one letter per generator, lowercase forward and uppercase
//    inverse, in the order x y z a b c ... w (so x_1 = 'x' and ranks up
//    to 26 are reachable);
//  - indexed: whitespace-separated tokens x3 / X3 for x_3 and its inverse,
//    any rank.
enum class WordSyntax { compact, indexed };

// Thrown for malformed input text (CLI exit code 2), as opposed to domain
// errors.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses and freely reduces. Whitespace is ignored in compact syntax.
Word parse_word(const std::string& text, int rank, WordSyntax syntax);

std::string print_word(const Word& w, WordSyntax syntax);

// Generator list of a subgroup of F_k x Z/n, as given on the command line
// or in a subgroup file. modulus 0 or 1 means a plain free group.
struct SubgroupSpec {
  int ambient_rank = 0;
  int modulus = 0;
  std::vector<std::pair<std::string, int>> generators;  // (word text, residue)
};

// Inline form: comma-separated words, each optionally ":residue".
SubgroupSpec parse_inline_generators(const std::string& text, int rank,
                                     int modulus);

// JSON document {"ambientRank": k, "modulus": n,
//                "generators": [{"word": "...", "residue": c}, ...]}.
SubgroupSpec parse_subgroup_json(const std::string& json_text);
std::string subgroup_to_json(const SubgroupSpec& spec);

std::vector<std::pair<Word, int>> resolve_generators(const SubgroupSpec& spec,
                                                     WordSyntax syntax);

}  // namespace hn

#endif  // HN_PARSE_HPP_
