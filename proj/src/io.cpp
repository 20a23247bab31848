#include "stardisc/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "stardisc/errors.hpp"

namespace stardisc {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || end != token.data() + token.size())
    throw input_error("expected a non-negative integer, got '" + std::string(token) + "'");
  return v;
}

// Yields non-comment, non-blank lines split into fields, with line numbers.
class RecordReader {
 public:
  explicit RecordReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& fields) {
    while (std::getline(in_, line_)) {
      ++line_no_;
      if (!line_.empty() && line_[0] == '#') continue;
      fields = split_fields(line_);
      if (!fields.empty()) return true;
    }
    return false;
  }

  std::size_t line_no() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t line_no_ = 0;
};

std::pair<std::size_t, std::size_t> read_header(RecordReader& reader) {
  std::vector<std::string_view> fields;
  if (!reader.next(fields)) throw input_error("missing header line");
  if (fields.size() != 2) reader.fail("header must hold exactly two integers");
  const std::size_t s = parse_count(fields[0]);
  const std::size_t rows = parse_count(fields[1]);
  if (s == 0 || rows == 0) reader.fail("header values must be positive");
  return {s, rows};
}

std::vector<double> read_row(RecordReader& reader, std::size_t width) {
  std::vector<std::string_view> fields;
  if (!reader.next(fields)) throw input_error("file ends before all rows were read");
  if (fields.size() != width)
    reader.fail("expected " + std::to_string(width) + " values, found " +
                std::to_string(fields.size()));
  std::vector<double> row;
  row.reserve(width);
  try {
    for (auto f : fields) row.push_back(parse_real(f));
  } catch (const input_error& e) {
    reader.fail(e.what());
  }
  return row;
}

void expect_end(RecordReader& reader) {
  std::vector<std::string_view> fields;
  if (reader.next(fields)) reader.fail("unexpected data after the declared rows");
}

void write_row(std::ostream& out, std::span<const double> a, std::span<const double> b = {}) {
  bool first = true;
  for (auto part : {a, b})
    for (double v : part) {
      if (!first) out << ' ';
      out << format_real(v);
      first = false;
    }
  out << '\n';
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_real(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || end != token.data() + token.size() || token.empty())
    throw input_error("not a number: '" + std::string(token) + "'");
  return v;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    out.push_back(parse_real(token));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void write_point_set(std::ostream& out, const PointSet& points) {
  out << points.dim() << ' ' << points.size() << '\n';
  for (const auto& p : points.points()) write_row(out, p.coords());
}

PointSet read_point_set(std::istream& in) {
  RecordReader reader(in);
  const auto [s, n] = read_header(reader);
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = read_row(reader, s);
    try {
      points.emplace_back(std::move(row));
    } catch (const input_error& e) {
      reader.fail(e.what());
    }
  }
  expect_end(reader);
  return PointSet(s, std::move(points));
}

PointSet load_point_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path.string() + "'");
  return read_point_set(in);
}

void save_point_set(const std::filesystem::path& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path.string() + "'");
  write_point_set(out, points);
  if (!out) throw input_error("write to '" + path.string() + "' failed");
}

void write_brackets(std::ostream& out, const BracketingCover& cover) {
  out << cover.dim << ' ' << cover.brackets.size() << '\n';
  for (const auto& b : cover.brackets) write_row(out, b.lower.coords(), b.upper.coords());
}

std::vector<Bracket> read_brackets(std::istream& in) {
  RecordReader reader(in);
  const auto [s, rows] = read_header(reader);
  std::vector<Bracket> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = read_row(reader, 2 * s);
    const auto mid = row.begin() + static_cast<std::ptrdiff_t>(s);
    try {
      out.push_back({Point(std::vector<double>(row.begin(), mid)),
                     Point(std::vector<double>(mid, row.end()))});
    } catch (const input_error& e) {
      reader.fail(e.what());
    }
    if (!dominated_by(out.back().lower, out.back().upper))
      reader.fail("bracket needs lower <= upper");
  }
  expect_end(reader);
  return out;
}

}  // namespace stardisc
