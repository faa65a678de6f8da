#include "relgraph/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "relgraph/errors.hpp"

namespace relgraph::io {

namespace {

// Non-empty, comment-stripped lines with their 1-based numbers.
struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
  std::string storage;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(Line& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      line.storage = std::move(raw);
      line.number = number_;
      line.fields.clear();
      std::string_view rest = line.storage;
      while (true) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = rest.find_first_of(" \t\r");
        line.fields.push_back(rest.substr(0, end));
        if (end == std::string_view::npos) break;
        rest.remove_prefix(end);
      }
      if (!line.fields.empty()) return true;
    }
    return false;
  }

  std::size_t line_number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::size_t parse_index(std::string_view field, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(field) + "'");
  }
  return value;
}

std::size_t read_header(LineReader& reader, const char* what) {
  Line line;
  if (!reader.next(line)) throw ParseError(reader.line_number() + 1, std::string("missing ") + what + " header");
  if (line.fields.size() != 1) throw ParseError(line.number, std::string("header must be a single ") + what);
  const std::size_t n = parse_index(line.fields[0], line.number);
  if (n == 0) throw ParseError(line.number, std::string(what) + " must be positive");
  return n;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

}  // namespace

Relation read_relation(std::istream& in) {
  LineReader reader(in);
  const std::size_t n = read_header(reader, "vertex count");
  Relation rel(n);
  Line line;
  while (reader.next(line)) {
    if (line.fields.size() != 2) throw ParseError(line.number, "expected 'u v'");
    const std::size_t u = parse_index(line.fields[0], line.number);
    const std::size_t v = parse_index(line.fields[1], line.number);
    if (u >= n || v >= n) {
      throw ParseError(line.number, "arc (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") outside [0, " + std::to_string(n) + ")");
    }
    rel.add_arc(u, v);
  }
  return rel;
}

Relation read_relation_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_relation(in);
}

void write_relation(std::ostream& out, const Relation& rel) {
  out << rel.size() << '\n';
  for (const auto& [u, v] : rel.arcs()) out << u << ' ' << v << '\n';
}

std::string format_relation(const Relation& rel) {
  std::ostringstream out;
  write_relation(out, rel);
  return out.str();
}

void write_relation_file(const std::filesystem::path& path, const Relation& rel) {
  auto out = open_output(path);
  write_relation(out, rel);
}

FiniteGroup read_group(std::istream& in) {
  LineReader reader(in);
  const std::size_t n = read_header(reader, "group order");
  std::vector<std::vector<Element>> table;
  table.reserve(n);
  Line line;
  while (reader.next(line)) {
    if (table.size() == n) throw ParseError(line.number, "more than " + std::to_string(n) + " table rows");
    if (line.fields.size() != n) {
      throw ParseError(line.number, "row has " + std::to_string(line.fields.size()) + " entries, expected " +
                                        std::to_string(n));
    }
    auto& row = table.emplace_back();
    for (auto field : line.fields) row.push_back(parse_index(field, line.number));
  }
  if (table.size() != n) {
    throw ParseError(reader.line_number(), "expected " + std::to_string(n) + " table rows, found " +
                                               std::to_string(table.size()));
  }
  return FiniteGroup::from_table(table);
}

FiniteGroup read_group_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_group(in);
}

void write_group(std::ostream& out, const FiniteGroup& group) {
  out << group.order() << '\n';
  for (Element g = 0; g < group.order(); ++g) {
    for (Element h = 0; h < group.order(); ++h) out << (h == 0 ? "" : " ") << group.mul(g, h);
    out << '\n';
  }
}

void write_group_file(const std::filesystem::path& path, const FiniteGroup& group) {
  auto out = open_output(path);
  write_group(out, group);
}

std::vector<Element> read_subset(std::istream& in) {
  LineReader reader(in);
  std::vector<Element> out;
  Line line;
  while (reader.next(line)) {
    if (line.fields.size() != 1) throw ParseError(line.number, "expected one element per line");
    out.push_back(parse_index(line.fields[0], line.number));
  }
  return out;
}

std::vector<Element> read_subset_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_subset(in);
}

void write_subset(std::ostream& out, const std::vector<Element>& subset) {
  for (Element s : subset) out << s << '\n';
}

}  // namespace relgraph::io
