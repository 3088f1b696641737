#include "toml_lite.hpp"

#include <cctype>
#include <string>

#include "confalg/errors.hpp"

namespace confalg::detail {

namespace {

using nlohmann::json;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  json parse() {
    json root = json::object();
    json* current = &root;
    while (true) {
      skip_blank_lines();
      if (at_end()) break;
      if (peek() == '[') {
        current = parse_header(root);
      } else {
        parse_key_value(*current);
      }
      expect_line_end();
    }
    return root;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    const char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_) + ": " + what);
  }

  void skip_inline_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) get();
  }

  void skip_comment() {
    if (peek() == '#') {
      while (!at_end() && peek() != '\n') get();
    }
  }

  void skip_blank_lines() {
    while (!at_end()) {
      skip_inline_space();
      skip_comment();
      if (peek() == '\r') get();
      if (peek() == '\n') {
        get();
      } else {
        break;
      }
    }
  }

  // Whitespace, newlines and comments, as allowed inside arrays.
  void skip_space_and_newlines() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else if (c == '#') {
        skip_comment();
      } else {
        break;
      }
    }
  }

  void expect_line_end() {
    skip_inline_space();
    skip_comment();
    if (peek() == '\r') get();
    if (at_end()) return;
    if (peek() != '\n') fail(std::string("unexpected character '") + peek() + "'");
    get();
  }

  std::string parse_key() {
    skip_inline_space();
    if (peek() == '"') return parse_basic_string();
    if (peek() == '\'') return parse_literal_string();
    std::string key;
    while (!at_end()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
        key += get();
      } else {
        break;
      }
    }
    if (key.empty()) fail("expected a key");
    return key;
  }

  json* parse_header(json& root) {
    get();  // '['
    const bool array_of_tables = peek() == '[';
    if (array_of_tables) get();
    const std::string name = parse_key();
    skip_inline_space();
    if (get() != ']') fail("expected ']' after table name");
    if (array_of_tables && (at_end() || get() != ']')) fail("expected ']]' after array-of-tables name");

    if (array_of_tables) {
      json& arr = root[name];
      if (arr.is_null()) arr = json::array();
      if (!arr.is_array()) fail("'" + name + "' redefined as an array of tables");
      arr.push_back(json::object());
      return &arr.back();
    }
    if (root.contains(name)) fail("table '" + name + "' defined twice");
    root[name] = json::object();
    return &root[name];
  }

  void parse_key_value(json& table) {
    const std::string key = parse_key();
    skip_inline_space();
    if (at_end() || get() != '=') fail("expected '=' after key '" + key + "'");
    skip_inline_space();
    json value = parse_value();
    if (table.contains(key)) fail("duplicate key '" + key + "'");
    table[key] = std::move(value);
  }

  json parse_value() {
    const char c = peek();
    if (c == '"') return parse_basic_string();
    if (c == '\'') return parse_literal_string();
    if (c == '[') return parse_array();
    if (c == '{') return parse_inline_table();
    if (c == 't' || c == 'f') return parse_bool();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_integer();
    fail("unsupported value");
  }

  std::string parse_basic_string() {
    get();  // '"'
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      const char c = get();
      if (c == '"') break;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (at_end()) fail("unterminated escape");
      switch (const char e = get()) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        default: fail(std::string("unsupported escape '\\") + e + "'");
      }
    }
    return out;
  }

  std::string parse_literal_string() {
    get();  // '\''
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      const char c = get();
      if (c == '\'') break;
      out += c;
    }
    return out;
  }

  json parse_bool() {
    if (text_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (text_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    fail("expected boolean");
  }

  json parse_integer() {
    std::string digits;
    if (peek() == '+' || peek() == '-') digits += get();
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
      const char c = get();
      if (c != '_') digits += c;
    }
    if (digits.empty() || digits == "+" || digits == "-") fail("expected integer");
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E')) fail("floating-point values are not supported");
    try {
      return std::stoll(digits);
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  json parse_array() {
    get();  // '['
    json arr = json::array();
    while (true) {
      skip_space_and_newlines();
      if (at_end()) fail("unterminated array");
      if (peek() == ']') {
        get();
        return arr;
      }
      arr.push_back(parse_value());
      skip_space_and_newlines();
      if (peek() == ',') {
        get();
      } else if (peek() != ']') {
        fail("expected ',' or ']' in array");
      }
    }
  }

  json parse_inline_table() {
    get();  // '{'
    json table = json::object();
    skip_inline_space();
    if (peek() == '}') {
      get();
      return table;
    }
    while (true) {
      parse_key_value(table);
      skip_inline_space();
      if (at_end()) fail("unterminated inline table");
      const char c = get();
      if (c == '}') return table;
      if (c != ',') fail("expected ',' or '}' in inline table");
      skip_inline_space();
    }
  }
};

}  // namespace

nlohmann::json parse_toml(std::string_view text) { return Parser(text).parse(); }

}  // namespace confalg::detail
