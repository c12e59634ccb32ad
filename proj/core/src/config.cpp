#include <charconv>
#include <fstream>
#include <sstream>

#include "hweavoa/harness.hpp"

namespace hweavoa::harness {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Drops a trailing # comment that is not inside a string.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

class LineError {
 public:
  explicit LineError(std::size_t line) : line_(line) {}
  [[noreturn]] void operator()(const std::string& msg) const {
    throw ConfigError("config line " + std::to_string(line_) + ": " + msg);
  }

 private:
  std::size_t line_;
};

std::string parse_string(std::string_view v, const LineError& fail) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"')
    fail("expected a quoted string, got '" + std::string(v) + "'");
  const auto inner = v.substr(1, v.size() - 2);
  if (inner.find('"') != std::string_view::npos) fail("unexpected quote in string");
  return std::string(inner);
}

std::vector<std::string> parse_list(std::string_view v, const LineError& fail) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    fail("expected a [list], got '" + std::string(v) + "'");
  std::vector<std::string> out;
  std::string_view rest = trim(v.substr(1, v.size() - 2));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = trim(rest.substr(0, comma));
    if (!item.empty()) out.push_back(parse_string(item, fail));
    if (comma == std::string_view::npos) break;
    rest = trim(rest.substr(comma + 1));
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view v, const LineError& fail) {
  Int out{};
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    fail("expected an integer, got '" + std::string(v) + "'");
  return out;
}

bool parse_bool(std::string_view v, const LineError& fail) {
  if (v == "true") return true;
  if (v == "false") return false;
  fail("expected true or false, got '" + std::string(v) + "'");
}

}  // namespace

Campaign parse_campaign(std::string_view text) {
  Campaign c;
  c.variants.clear();
  c.functions.clear();
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const LineError fail(line_no);

    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']' && line.find('=') == std::string_view::npos) {
      if (trim(line.substr(1, line.size() - 2)) != "campaign")
        fail("unknown section " + std::string(line));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (value.empty()) fail("missing value for '" + std::string(key) + "'");

    if (key == "variants") c.variants = parse_list(value, fail);
    else if (key == "functions") c.functions = parse_list(value, fail);
    else if (key == "runs") c.runs = parse_int<int>(value, fail);
    else if (key == "base_seed") c.base_seed = parse_int<std::uint64_t>(value, fail);
    else if (key == "output_dir") c.output_dir = parse_string(value, fail);
    else if (key == "dim") c.dim = parse_int<std::size_t>(value, fail);
    else if (key == "pop_size") c.pop_size = parse_int<int>(value, fail);
    else if (key == "max_iters") c.max_iters = parse_int<int>(value, fail);
    else if (key == "record_wall_time") c.record_wall_time = parse_bool(value, fail);
    else if (key == "threads") c.threads = parse_int<int>(value, fail);
    else fail("unknown key '" + std::string(key) + "'");
  }
  c.validate();
  return c;
}

Campaign load_campaign(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_campaign(buf.str());
}

}  // namespace hweavoa::harness
