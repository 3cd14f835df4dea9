#include "ratdyn/cli/system_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ratdyn/error.hpp"

namespace ratdyn {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Maps byte offsets of the whole file to 1-based line/column.
class Positions {
 public:
  explicit Positions(std::string_view text) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') starts_.push_back(i + 1);
    }
  }

  SourceOrigin at(std::size_t offset) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - starts_.begin());
    return {static_cast<int>(line), static_cast<int>(offset - starts_[line - 1] + 1)};
  }

 private:
  std::vector<std::size_t> starts_;
};

[[noreturn]] void fail(const std::string& message, SourceOrigin at) {
  throw ParseError(ErrorCode::parse, message, at.line, at.column);
}

// Cursor over one statement; offsets stay relative to the whole file.
class Statement {
 public:
  Statement(std::string_view text, std::size_t begin, std::size_t end, const Positions& pos)
      : text_(text), pos_(begin), end_(end), positions_(pos) {}

  void skip_space() {
    while (pos_ < end_ && is_space(text_[pos_])) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= end_;
  }
  SourceOrigin where() const { return positions_.at(pos_); }

  bool peek(std::string_view s) {
    skip_space();
    return text_.substr(pos_, std::min(s.size(), end_ - pos_)) == s;
  }
  void expect(std::string_view s) {
    if (!peek(s)) fail("expected '" + std::string(s) + "'", where());
    pos_ += s.size();
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    if (!is_identifier(id)) {
      pos_ = start;
      fail("expected an identifier", where());
    }
    return id;
  }

  std::string quoted() {
    skip_space();
    if (pos_ >= end_ || text_[pos_] != '"') fail("expected a quoted string", where());
    std::string out;
    ++pos_;
    while (pos_ < end_ && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < end_) ++pos_;
      out.push_back(text_[pos_++]);
    }
    if (pos_ >= end_) fail("unterminated string", where());
    ++pos_;
    return out;
  }

  // Rest of the statement, unquoted when it is a single quoted string.
  std::string value() {
    skip_space();
    if (pos_ < end_ && text_[pos_] == '"') {
      std::string v = quoted();
      if (!done()) fail("unexpected text after string", where());
      return v;
    }
    std::string v(text_.substr(pos_, end_ - pos_));
    while (!v.empty() && is_space(v.back())) v.pop_back();
    pos_ = end_;
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
  const Positions& positions_;
};

// Comment bytes become blanks so offsets keep their positions.
std::string blank_comments(std::string_view text) {
  std::string out(text);
  bool in_string = false;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const char c = out[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
    } else if (c == '#') {
      while (i < out.size() && out[i] != '\n') out[i++] = ' ';
    }
  }
  return out;
}

void validate(const SystemFile& f) {
  std::set<std::string> seen;
  for (const auto& v : f.variables) {
    if (!is_identifier(v)) throw Error(ErrorCode::parse, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorCode::parse, "variable '" + v + "' declared twice");
  }
  if (f.variables.empty()) throw Error(ErrorCode::parse, "no variables declared");
  if (f.map.size() != f.variables.size()) {
    throw Error(ErrorCode::parse, "expected " + std::to_string(f.variables.size()) + " map expressions, got " +
                                      std::to_string(f.map.size()));
  }
}

}  // namespace

SystemFile parse_system_text(std::string_view source) {
  const std::string text = blank_comments(source);
  const Positions positions(text);
  SystemFile file;
  std::vector<std::optional<std::pair<std::string, SourceOrigin>>> assigned;
  bool declared = false;

  std::size_t begin = 0;
  bool in_string = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      const char c = text[i];
      if (in_string) {
        if (c == '\\') ++i;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') {
        in_string = true;
        continue;
      }
      if (c != ';') continue;
    }
    Statement st(text, begin, std::min(i, text.size()), positions);
    const bool last = i >= text.size();
    begin = i + 1;
    if (st.done()) continue;
    if (last) fail("missing ';' at end of statement", st.where());

    const SourceOrigin start = st.where();
    const std::string head = st.identifier();
    if (st.peek("->")) {
      st.expect("->");
      auto it = std::find(file.variables.begin(), file.variables.end(), head);
      if (it == file.variables.end()) fail("assignment to undeclared variable '" + head + "'", start);
      const std::size_t idx = static_cast<std::size_t>(it - file.variables.begin());
      if (assigned[idx]) fail("variable '" + head + "' assigned twice", start);
      st.skip_space();
      const SourceOrigin at = st.where();
      std::string expr = st.value();
      if (expr.empty()) fail("missing expression", at);
      assigned[idx] = std::make_pair(expr, at);
    } else if (head == "var") {
      if (declared) fail("variables declared twice", start);
      declared = true;
      do {
        file.variables.push_back(st.identifier());
      } while (st.peek(",") && (st.expect(","), true));
      if (!st.done()) fail("expected ',' or ';'", st.where());
      assigned.assign(file.variables.size(), std::nullopt);
      std::set<std::string> seen(file.variables.begin(), file.variables.end());
      if (seen.size() != file.variables.size()) fail("duplicate variable name", start);
    } else if (head == "name") {
      st.skip_space();
      file.name = st.value();
      if (file.name.empty()) fail("missing name", st.where());
    } else if (head == "description") {
      file.description = st.quoted();
      if (!st.done()) fail("unexpected text after description", st.where());
    } else if (head == "expect") {
      const std::string key = st.identifier();
      st.expect("=");
      file.expect.emplace_back(key, st.value());
    } else {
      fail("unknown statement '" + head + "'", start);
    }
  }

  if (!declared) fail("missing 'var' declaration", positions.at(0));
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) fail("no map expression for variable '" + file.variables[i] + "'", positions.at(text.size()));
    file.map.push_back(assigned[i]->first);
    file.map_origins.push_back(assigned[i]->second);
  }
  validate(file);
  return file;
}

SystemFile parse_system_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const SourceOrigin at = Positions(text).at(e.byte > 0 ? e.byte - 1 : 0);
    fail("malformed JSON", at);
  }
  SystemFile file;
  try {
    if (!doc.is_object()) throw Error(ErrorCode::parse, "system JSON must be an object");
    if (doc.contains("name")) file.name = doc.at("name").get<std::string>();
    file.variables = doc.at("variables").get<std::vector<std::string>>();
    file.map = doc.at("map").get<std::vector<std::string>>();
    if (doc.contains("description")) file.description = doc.at("description").get<std::string>();
    if (doc.contains("expect")) {
      for (const auto& [key, value] : doc.at("expect").items()) {
        file.expect.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("bad system JSON: ") + e.what());
  }
  validate(file);
  return file;
}

SystemFile read_system_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = std::find_if_not(text.begin(), text.end(), is_space);
  SystemFile file = (first != text.end() && *first == '{') ? parse_system_json(text) : parse_system_text(text);
  if (file.name.empty()) file.name = path.stem().string();
  return file;
}

DynamicalSystem to_dynamical_system(const SystemFile& file) {
  std::vector<RationalFunction> coords;
  for (std::size_t i = 0; i < file.map.size(); ++i) {
    const SourceOrigin origin = i < file.map_origins.size() ? file.map_origins[i] : SourceOrigin{};
    coords.push_back(parse_expression(file.map[i], file.variables, origin));
  }
  return DynamicalSystem(file.variables, std::move(coords), file.name);
}

std::string format_system_text(const SystemFile& file) {
  std::ostringstream out;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q.push_back('\\');
      q.push_back(c);
    }
    return q + "\"";
  };
  if (!file.name.empty()) out << "name " << quote(file.name) << ";\n";
  if (!file.description.empty()) out << "description " << quote(file.description) << ";\n";
  out << "var ";
  for (std::size_t i = 0; i < file.variables.size(); ++i) out << (i ? ", " : "") << file.variables[i];
  out << ";\n";
  for (std::size_t i = 0; i < file.variables.size(); ++i) out << file.variables[i] << " -> " << file.map[i] << ";\n";
  for (const auto& [key, value] : file.expect) out << "expect " << key << " = " << quote(value) << ";\n";
  return out.str();
}

}  // namespace ratdyn
