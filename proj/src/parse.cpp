#include "hn/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace hn {
namespace {

// Compact alphabet in generator order: x y z a b ... w.
char compact_char(int index) {
  return index <= 3 ? static_cast<char>('x' + index - 1)
                    : static_cast<char>('a' + index - 4);
}

int compact_index(char lower) {
  if (lower >= 'x' && lower <= 'z') return lower - 'x' + 1;
  if (lower >= 'a' && lower <= 'w') return lower - 'a' + 4;
  return 0;
}

}  // namespace

Word parse_word(const std::string& text, int rank, WordSyntax syntax) {
  std::vector<int> letters;
  if (syntax == WordSyntax::compact) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      bool upper = std::isupper(static_cast<unsigned char>(c));
      int idx = compact_index(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      if (idx == 0) {
        throw ParseError(std::string("unexpected character '") + c +
                         "' in word");
      }
      letters.push_back(upper ? -idx : idx);
    }
  } else {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X')) {
        throw ParseError("malformed indexed letter '" + tok + "'");
      }
      int idx = 0;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
          throw ParseError("malformed indexed letter '" + tok + "'");
        }
        idx = idx * 10 + (tok[i] - '0');
      }
      if (idx == 0) throw ParseError("generator indices start at 1");
      letters.push_back(tok[0] == 'X' ? -idx : idx);
    }
  }
  for (int l : letters) {
    if (std::abs(l) > rank) {
      throw ParseError("generator index " + std::to_string(std::abs(l)) +
                       " exceeds ambient rank " + std::to_string(rank));
    }
  }
  return Word::reduce(letters, rank);
}

std::string print_word(const Word& w, WordSyntax syntax) {
  std::string out;
  if (syntax == WordSyntax::compact) {
    if (w.rank() > 26) {
      throw ParseError("compact syntax supports rank up to 26");
    }
    for (int l : w.letters()) {
      char c = compact_char(std::abs(l));
      out += l > 0 ? c
                   : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  } else {
    for (int l : w.letters()) {
      if (!out.empty()) out += ' ';
      out += (l > 0 ? "x" : "X") + std::to_string(std::abs(l));
    }
  }
  return out;
}

SubgroupSpec parse_inline_generators(const std::string& text, int rank,
                                     int modulus) {
  SubgroupSpec spec;
  spec.ambient_rank = rank;
  spec.modulus = modulus;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::string word = item;
    int residue = 0;
    auto colon = item.find(':');
    if (colon != std::string::npos) {
      word = item.substr(0, colon);
      try {
        residue = std::stoi(item.substr(colon + 1));
      } catch (const std::exception&) {
        throw ParseError("malformed residue in '" + item + "'");
      }
    }
    // trim
    auto b = word.find_first_not_of(" \t");
    auto e = word.find_last_not_of(" \t");
    word = b == std::string::npos ? "" : word.substr(b, e - b + 1);
    spec.generators.push_back({word, residue});
  }
  return spec;
}

SubgroupSpec parse_subgroup_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid subgroup JSON: ") + e.what());
  }
  SubgroupSpec spec;
  try {
    spec.ambient_rank = doc.at("ambientRank").get<int>();
    spec.modulus = doc.value("modulus", 0);
    for (const auto& g : doc.at("generators")) {
      spec.generators.push_back(
          {g.at("word").get<std::string>(), g.value("residue", 0)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid subgroup JSON: ") + e.what());
  }
  return spec;
}

std::string subgroup_to_json(const SubgroupSpec& spec) {
  nlohmann::json doc;
  doc["ambientRank"] = spec.ambient_rank;
  doc["modulus"] = spec.modulus;
  doc["generators"] = nlohmann::json::array();
  for (const auto& [w, c] : spec.generators) {
    doc["generators"].push_back({{"word", w}, {"residue", c}});
  }
  return doc.dump(2);
}

std::vector<std::pair<Word, int>> resolve_generators(const SubgroupSpec& spec,
                                                     WordSyntax syntax) {
  if (spec.ambient_rank < 1) {
    throw ParseError("ambient rank must be positive");
  }
  const int n = spec.modulus >= 2 ? spec.modulus : 1;
  std::vector<std::pair<Word, int>> out;
  for (const auto& [text, residue] : spec.generators) {
    out.push_back({parse_word(text, spec.ambient_rank, syntax),
                   ((residue % n) + n) % n});
  }
  return out;
}

}  // namespace hn
