#include "adeq/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adeq {

namespace {

[[noreturn]] void syntax(int line, int col, const std::string& what) {
  throw SyntaxError("line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + what);
}

struct Line {
  int number = 0;
  std::string text;
};

// Strips comments and blank lines, keeping 1-based line numbers.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back())))
      raw.pop_back();
    size_t start = 0;
    while (start < raw.size() &&
           std::isspace(static_cast<unsigned char>(raw[start])))
      ++start;
    if (start == raw.size()) continue;
    out.push_back({number, raw.substr(start)});
  }
  return out;
}

int parse_int(const Line& line, const std::string& token, size_t col) {
  if (token.empty()) syntax(line.number, static_cast<int>(col) + 1, "expected a number");
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    syntax(line.number, static_cast<int>(col) + 1,
           "expected a number, got '" + token + "'");
  }
  if (pos != token.size())
    syntax(line.number, static_cast<int>(col) + 1,
           "trailing characters in number '" + token + "'");
  return value;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

// Comma-separated integers after the colon.
std::vector<int> parse_int_list(const Line& line, const std::string& body) {
  std::vector<int> out;
  std::string token;
  size_t col = line.text.size() - body.size();
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] != ',') {
      if (!std::isspace(static_cast<unsigned char>(body[i]))) token += body[i];
      continue;
    }
    out.push_back(parse_int(line, token, col + i));
    token.clear();
  }
  return out;
}

// "prefix rest" split at the first colon; returns false when the line
// does not start with the given keyword.
bool keyword_line(const Line& line, const std::string& keyword,
                  std::string& head, std::string& body) {
  if (line.text.rfind(keyword, 0) != 0) return false;
  const auto colon = line.text.find(':');
  if (colon == std::string::npos)
    syntax(line.number, static_cast<int>(line.text.size()), "missing ':'");
  head = line.text.substr(keyword.size(), colon - keyword.size());
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front())))
    head.erase(head.begin());
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back())))
    head.pop_back();
  body = line.text.substr(colon + 1);
  return true;
}

std::string join_commas(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

SemigroupDocument parse_document(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) syntax(1, 1, "empty document");
  size_t at = 0;
  const int n = parse_int(lines[at], lines[at].text, 0);
  if (n < 1) syntax(lines[at].number, 1, "order must be at least 1");
  ++at;

  std::vector<std::vector<int>> table;
  for (int row = 0; row < n; ++row, ++at) {
    if (at >= lines.size())
      syntax(lines.back().number + 1, 1,
             "expected " + std::to_string(n) + " table rows");
    const auto tokens = split_ws(lines[at].text);
    if (static_cast<int>(tokens.size()) != n)
      syntax(lines[at].number, 1,
             "expected " + std::to_string(n) + " entries, got " +
                 std::to_string(tokens.size()));
    std::vector<int> entries;
    for (const auto& t : tokens) entries.push_back(parse_int(lines[at], t, 0));
    table.push_back(std::move(entries));
  }

  std::optional<std::vector<std::string>> labels;
  SemigroupDocument doc;
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    std::string head, body;
    if (keyword_line(line, "labels", head, body)) {
      if (!head.empty()) syntax(line.number, 7, "unexpected text after 'labels'");
      auto parts = split_ws(body);
      if (static_cast<int>(parts.size()) != n)
        syntax(line.number, 1,
               "expected " + std::to_string(n) + " labels, got " +
                   std::to_string(parts.size()));
      labels = std::move(parts);
    } else if (keyword_line(line, "subset ", head, body)) {
      if (head.empty()) syntax(line.number, 8, "subset needs a name");
      doc.subsets[head] = ElementSubset::of(n, parse_int_list(line, body));
    } else if (keyword_line(line, "map ", head, body)) {
      if (head.empty()) syntax(line.number, 5, "map needs a name");
      doc.maps[head] = parse_int_list(line, body);
    } else if (keyword_line(line, "chen ", head, body)) {
      if (!doc.chen) doc.chen = ChenSection{};
      const auto values = parse_int_list(line, body);
      if (head == "carrier") {
        if (values.size() != 1) syntax(line.number, 1, "carrier needs one value");
        doc.chen->carrier = values.front();
      } else if (head == "embed") {
        doc.chen->embed = values;
      } else if (head == "proj") {
        doc.chen->proj = values;
      } else if (head.rfind("act ", 0) == 0) {
        doc.chen->act[parse_int(line, head.substr(4), 9)] = values;
      } else if (head.rfind("star ", 0) == 0) {
        doc.chen->star[parse_int(line, head.substr(5), 10)] = values;
      } else {
        syntax(line.number, 6, "unknown chen key '" + head + "'");
      }
    } else {
      syntax(line.number, 1, "unrecognised line '" + line.text + "'");
    }
  }
  doc.sg = FiniteSemigroup::validate(table, std::move(labels));
  return doc;
}

std::string serialize_document(const SemigroupDocument& doc) {
  std::string out = std::to_string(doc.sg.order()) + "\n";
  for (const auto& row : doc.sg.rows()) {
    for (size_t i = 0; i < row.size(); ++i)
      out += (i ? " " : "") + std::to_string(row[i]);
    out += "\n";
  }
  if (doc.sg.labels()) {
    out += "labels:";
    for (const auto& l : *doc.sg.labels()) out += " " + l;
    out += "\n";
  }
  for (const auto& [name, subset] : doc.subsets)
    out += "subset " + name + ": " + join_commas(subset.members()) + "\n";
  for (const auto& [name, map] : doc.maps)
    out += "map " + name + ": " + join_commas(map) + "\n";
  if (doc.chen) {
    out += "chen carrier: " + std::to_string(doc.chen->carrier) + "\n";
    out += "chen embed: " + join_commas(doc.chen->embed) + "\n";
    out += "chen proj: " + join_commas(doc.chen->proj) + "\n";
    for (const auto& [x, row] : doc.chen->act)
      out += "chen act " + std::to_string(x) + ": " + join_commas(row) + "\n";
    for (const auto& [e, row] : doc.chen->star)
      out += "chen star " + std::to_string(e) + ": " + join_commas(row) + "\n";
  }
  return out;
}

ChenData chen_data_from_document(const SemigroupDocument& doc) {
  if (!doc.chen) throw DataInvalidError("document has no chen section");
  const ChenSection& c = *doc.chen;
  const FiniteSemigroup& s0 = doc.sg;
  const auto idem = idempotents(s0).members();
  const int k = static_cast<int>(idem.size());
  if (static_cast<int>(c.embed.size()) != k)
    throw DataInvalidError("chen embed needs one value per idempotent");
  if (static_cast<int>(c.proj.size()) != c.carrier)
    throw DataInvalidError("chen proj needs one value per carrier element");

  ChenData d;
  d.s0 = s0;
  d.carrier_size = c.carrier;
  d.e0_to_carrier.assign(s0.order(), -1);
  for (int i = 0; i < k; ++i) {
    if (c.embed[i] < 0 || c.embed[i] >= c.carrier)
      throw DataInvalidError("chen embed value out of range");
    d.e0_to_carrier[idem[i]] = c.embed[i];
  }
  d.proj = c.proj;
  d.act.assign(c.carrier, std::vector<int>(s0.order(), -1));
  d.star.assign(s0.order(), std::vector<int>(c.carrier, -1));
  for (int x = 0; x < c.carrier; ++x) {
    const auto it = c.act.find(x);
    if (it == c.act.end() || static_cast<int>(it->second.size()) != k)
      throw DataInvalidError("chen act row missing or wrong size for " +
                             std::to_string(x));
    for (int i = 0; i < k; ++i) d.act[x][idem[i]] = it->second[i];
  }
  for (int i = 0; i < k; ++i) {
    const auto it = c.star.find(idem[i]);
    if (it == c.star.end() ||
        static_cast<int>(it->second.size()) != c.carrier)
      throw DataInvalidError("chen star row missing or wrong size for " +
                             std::to_string(idem[i]));
    d.star[idem[i]] = it->second;
  }
  return d;
}

}  // namespace adeq
