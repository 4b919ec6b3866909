#include "walkerpc/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "walkerpc/error.hpp"

namespace walkerpc {

namespace {

struct Located {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct StringValue {
  std::string text;
  Located at;
};

struct NumberValue {
  std::string text;
  Located at;
};

struct ListValue;
using Value = std::variant<StringValue, NumberValue, ListValue>;

struct ListValue {
  std::vector<Value> items;
  Located at;
};

Located where(const Value& v) {
  return std::visit([](const auto& x) { return x.at; }, v);
}

[[noreturn]] void fail(const std::string& what, Located at) { throw ParseError(what, at.line, at.column); }

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  Located here() const { return {line_, i_ + 1}; }
  bool done() {
    skip_space();
    return i_ >= s_.size() || s_[i_] == '#';
  }

  std::pair<std::string, Located> key() {
    skip_space();
    const Located at = here();
    std::string out;
    for (;;) {
      if (i_ >= s_.size() || !ident_start(s_[i_])) fail("expected a key", here());
      while (i_ < s_.size() && ident_char(s_[i_])) out += s_[i_++];
      if (i_ < s_.size() && s_[i_] == '.') {
        out += s_[i_++];
        continue;
      }
      return {out, at};
    }
  }

  void expect(char c) {
    skip_space();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'", here());
    ++i_;
  }

  Value value() {
    skip_space();
    if (i_ >= s_.size()) fail("expected a value", here());
    const char c = s_[i_];
    if (c == '"') return string();
    if (c == '[') return list();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') return number();
    fail("expected a string, number or list", here());
  }

 private:
  void skip_space() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) ++i_;
  }

  StringValue string() {
    ++i_;
    StringValue v{{}, here()};
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\') {
        if (i_ + 1 >= s_.size() || (s_[i_ + 1] != '"' && s_[i_ + 1] != '\\')) fail("invalid escape", here());
        ++i_;
      }
      v.text += s_[i_++];
    }
    if (i_ >= s_.size()) fail("unterminated string", v.at);
    ++i_;
    return v;
  }

  NumberValue number() {
    NumberValue v{{}, here()};
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.' || s_[i_] == '-' ||
                              s_[i_] == '+' || s_[i_] == '/')) {
      v.text += s_[i_++];
    }
    return v;
  }

  ListValue list() {
    ListValue v{{}, here()};
    ++i_;
    skip_space();
    if (i_ < s_.size() && s_[i_] == ']') {
      ++i_;
      return v;
    }
    for (;;) {
      v.items.push_back(value());
      skip_space();
      if (i_ < s_.size() && s_[i_] == ',') {
        ++i_;
        continue;
      }
      if (i_ < s_.size() && s_[i_] == ']') {
        ++i_;
        return v;
      }
      fail("expected ',' or ']'", here());
    }
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t i_ = 0;
};

const StringValue& as_string(const Value& v, const std::string& key) {
  if (const auto* s = std::get_if<StringValue>(&v)) return *s;
  fail("'" + key + "' expects a quoted string", where(v));
}

const NumberValue& as_number(const Value& v, const std::string& key) {
  if (const auto* n = std::get_if<NumberValue>(&v)) return *n;
  fail("'" + key + "' expects a number", where(v));
}

double to_double(const NumberValue& n) {
  double out = 0.0;
  const char* first = n.text.data();
  const char* last = first + n.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || !std::isfinite(out)) fail("malformed number '" + n.text + "'", n.at);
  return out;
}

long long to_integer(const NumberValue& n) {
  long long out = 0;
  const char* first = n.text.data();
  const char* last = first + n.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) fail("expected an integer, got '" + n.text + "'", n.at);
  return out;
}

bool reserved(const std::string& name) {
  static const std::set<std::string> words{"x", "y", "z", "exp", "sqrt"};
  return words.contains(name);
}

struct Entry {
  std::string key;
  Located key_at;
  Value value;
};

ScalarField compile(const StringValue& v, const ConstantMap& constants, const DefinitionMap& definitions) {
  return parse_expr(v.text, constants, definitions, SourceOrigin{v.at.line, v.at.column});
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

Manifest parse_manifest(std::string_view text) {
  std::vector<Entry> entries;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++line_no;
    LineReader r(text.substr(start, end - start), line_no);
    if (!r.done()) {
      auto [key, at] = r.key();
      r.expect('=');
      Value value = r.value();
      if (!r.done()) fail("unexpected text after value", r.here());
      if (!seen.insert(key).second) fail("duplicate key '" + key + "'", at);
      entries.push_back({std::move(key), at, std::move(value)});
    }
    start = end + 1;
  }
  const Located end_of_document{line_no + 1, 1};

  Manifest m;
  std::array<std::optional<StringValue>, 4> fields;
  std::vector<StringValue> positive;
  std::vector<StringValue> nonzero;
  std::vector<std::pair<std::string, StringValue>> defines;

  for (const Entry& e : entries) {
    const std::string& k = e.key;
    if (k == "name") {
      m.name = as_string(e.value, k).text;
    } else if (k == "epsilon") {
      const long long eps = to_integer(as_number(e.value, k));
      if (eps != 1 && eps != -1) fail("epsilon must be 1 or -1", where(e.value));
      m.epsilon = static_cast<int>(eps);
    } else if (k == "f" || k == "xi1" || k == "xi2" || k == "xi3") {
      const std::size_t slot = k == "f" ? 0 : static_cast<std::size_t>(k[2] - '0');
      fields[slot] = as_string(e.value, k);
    } else if (k.starts_with("const.") || k.starts_with("define.")) {
      const std::string name = k.substr(k.find('.') + 1);
      if (name.empty() || name.find('.') != std::string::npos || reserved(name)) {
        fail("invalid name '" + name + "'", e.key_at);
      }
      if (m.constants.contains(name) ||
          std::any_of(defines.begin(), defines.end(), [&](const auto& d) { return d.first == name; })) {
        fail("'" + name + "' is bound twice", e.key_at);
      }
      if (k.starts_with("const.")) {
        const NumberValue& n = as_number(e.value, k);
        try {
          m.constants.emplace(name, Rational::parse(n.text));
        } catch (const Error& err) {
          fail(err.what(), n.at);
        }
      } else {
        defines.emplace_back(name, as_string(e.value, k));
      }
    } else if (k == "domain.x" || k == "domain.y" || k == "domain.z") {
      const auto* list = std::get_if<ListValue>(&e.value);
      if (list == nullptr || list->items.size() != 2) fail("'" + k + "' expects [lo, hi]", where(e.value));
      const double lo = to_double(as_number(list->items[0], k));
      const double hi = to_double(as_number(list->items[1], k));
      if (!(lo < hi)) fail("empty interval for '" + k + "'", where(e.value));
      m.domain.box.axes[static_cast<std::size_t>(k.back() - 'x')] = Interval{lo, hi};
    } else if (k == "require_positive" || k == "require_nonzero") {
      const auto* list = std::get_if<ListValue>(&e.value);
      if (list == nullptr) fail("'" + k + "' expects a list of strings", where(e.value));
      for (const Value& item : list->items) (k == "require_positive" ? positive : nonzero).push_back(as_string(item, k));
    } else if (k == "samples") {
      const long long n = to_integer(as_number(e.value, k));
      if (n < 1 || n > 100000) fail("samples must be in [1, 100000]", where(e.value));
      m.sampling.samples = static_cast<int>(n);
    } else if (k == "seed") {
      const long long n = to_integer(as_number(e.value, k));
      if (n < 0) fail("seed must be non-negative", where(e.value));
      m.sampling.seed = static_cast<std::uint64_t>(n);
    } else if (k == "tol") {
      const double t = to_double(as_number(e.value, k));
      if (!(t > 0.0 && t < 1.0)) fail("tol must be in (0, 1)", where(e.value));
      m.sampling.tol = t;
    } else {
      fail("unknown key '" + k + "'", e.key_at);
    }
  }

  static constexpr std::array<const char*, 4> kRequired{"f", "xi1", "xi2", "xi3"};
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (!fields[i]) fail(std::string("missing required key '") + kRequired[i] + "'", end_of_document);
  }

  DefinitionMap definitions;
  for (const auto& [name, v] : defines) {
    definitions.emplace(name, compile(v, m.constants, definitions));
    m.definitions_text.emplace_back(name, v.text);
  }
  m.f_text = fields[0]->text;
  m.f = compile(*fields[0], m.constants, definitions);
  std::array<ScalarField, 3> xi;
  for (std::size_t i = 0; i < 3; ++i) {
    m.xi_text[i] = fields[i + 1]->text;
    xi[i] = compile(*fields[i + 1], m.constants, definitions);
  }
  m.xi = ReebField{xi[0], xi[1], xi[2]};
  for (const StringValue& v : positive) {
    m.require_positive_text.push_back(v.text);
    m.domain.require_positive.push_back(compile(v, m.constants, definitions));
  }
  for (const StringValue& v : nonzero) {
    m.require_nonzero_text.push_back(v.text);
    m.domain.require_nonzero.push_back(compile(v, m.constants, definitions));
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read manifest '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::string to_text(const Manifest& m) {
  std::ostringstream out;
  if (!m.name.empty()) out << "name = " << quote(m.name) << '\n';
  out << "epsilon = " << m.epsilon << '\n';
  for (const auto& [name, value] : m.constants) out << "const." << name << " = " << value.to_string() << '\n';
  for (const auto& [name, text] : m.definitions_text) out << "define." << name << " = " << quote(text) << '\n';
  out << "f = " << quote(m.f_text) << '\n';
  for (int i = 0; i < 3; ++i) out << "xi" << i + 1 << " = " << quote(m.xi_text[static_cast<std::size_t>(i)]) << '\n';
  for (Axis a : kAxes) {
    const Interval& iv = m.domain.box[a];
    out << "domain." << axis_name(a) << " = [" << shortest(iv.lo) << ", " << shortest(iv.hi) << "]\n";
  }
  auto list = [&](const char* key, const std::vector<std::string>& items) {
    out << key << " = [";
    for (std::size_t i = 0; i < items.size(); ++i) out << (i ? ", " : "") << quote(items[i]);
    out << "]\n";
  };
  list("require_positive", m.require_positive_text);
  list("require_nonzero", m.require_nonzero_text);
  out << "samples = " << m.sampling.samples << '\n';
  out << "seed = " << m.sampling.seed << '\n';
  out << "tol = " << shortest(m.sampling.tol) << '\n';
  return out.str();
}

}  // namespace walkerpc
