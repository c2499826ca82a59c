#include "obia/stext.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "obia/common.hpp"

namespace obia {
namespace stext {

Value Value::num_array(const std::vector<double>& v) {
  std::vector<Value> items;
  items.reserve(v.size());
  for (double d : v) items.push_back(num(d));
  return array(std::move(items));
}

Value Value::str_array(const std::vector<std::string>& v) {
  std::vector<Value> items;
  items.reserve(v.size());
  for (const auto& s : v) items.push_back(text(s));
  return array(std::move(items));
}

const Value* Node::find(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

double Node::get_number(const std::string& key) const {
  const Value* v = find(key);
  if (!v || v->kind != Value::Kind::Number)
    throw ParseError("block '" + name + "' (line " + std::to_string(line) +
                     "): missing numeric field '" + key + "'");
  return v->number;
}

double Node::get_number_or(const std::string& key, double fallback) const {
  const Value* v = find(key);
  if (!v) return fallback;
  if (v->kind != Value::Kind::Number)
    throw ParseError("block '" + name + "': field '" + key + "' is not a number");
  return v->number;
}

const std::string& Node::get_string(const std::string& key) const {
  const Value* v = find(key);
  if (!v || v->kind != Value::Kind::String)
    throw ParseError("block '" + name + "' (line " + std::to_string(line) +
                     "): missing string field '" + key + "'");
  return v->str;
}

std::string Node::get_string_or(const std::string& key,
                                const std::string& fb) const {
  const Value* v = find(key);
  if (!v) return fb;
  if (v->kind != Value::Kind::String)
    throw ParseError("block '" + name + "': field '" + key + "' is not a string");
  return v->str;
}

std::vector<double> Node::get_numbers(const std::string& key) const {
  const Value* v = find(key);
  if (!v || v->kind != Value::Kind::Array)
    throw ParseError("block '" + name + "': missing array field '" + key + "'");
  std::vector<double> out;
  out.reserve(v->items.size());
  for (const Value& item : v->items) {
    if (item.kind != Value::Kind::Number)
      throw ParseError("block '" + name + "': array '" + key +
                       "' holds a non-numeric element");
    out.push_back(item.number);
  }
  return out;
}

std::vector<std::string> Node::get_strings(const std::string& key) const {
  const Value* v = find(key);
  if (!v || v->kind != Value::Kind::Array)
    throw ParseError("block '" + name + "': missing array field '" + key + "'");
  std::vector<std::string> out;
  out.reserve(v->items.size());
  for (const Value& item : v->items) {
    if (item.kind != Value::Kind::String)
      throw ParseError("block '" + name + "': array '" + key +
                       "' holds a non-string element");
    out.push_back(item.str);
  }
  return out;
}

const Node* Node::find_child(const std::string& child_name) const {
  for (const Node& c : children)
    if (c.name == child_name) return &c;
  return nullptr;
}

std::vector<const Node*> Node::find_children(const std::string& child_name) const {
  std::vector<const Node*> out;
  for (const Node& c : children)
    if (c.name == child_name) out.push_back(&c);
  return out;
}

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail("expected identifier");
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  std::string string_lit() {
    skip_ws();
    expect_raw('"');
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string literal");
      const char c = text_[pos_];
      if (c == '\n') fail("newline inside string literal");
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) fail("dangling escape in string literal");
        const char e = text_[pos_];
        advance();
        if (e == '"' || e == '\\') out += e;
        else if (e == 'n') out += '\n';
        else fail(std::string("unknown escape '\\") + e + "'");
      } else {
        out += c;
      }
    }
    return out;
  }

  double number() {
    skip_ws();
    const char* start = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start) fail("expected number");
    const size_t len = static_cast<size_t>(end - start);
    for (size_t i = 0; i < len; ++i) advance();
    return v;
  }

  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("line " + std::to_string(line_) + ", column " +
                     std::to_string(col_) + ": " + msg);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void expect_raw(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

Value parse_value(Lexer& lex) {
  Value v;
  v.line = lex.line();
  const char c = lex.peek();
  if (c == '"') {
    v = Value::text(lex.string_lit());
  } else if (c == '[') {
    lex.expect('[');
    std::vector<Value> items;
    if (lex.peek() != ']') {
      while (true) {
        items.push_back(parse_value(lex));
        if (lex.peek() == ',') {
          lex.expect(',');
          continue;
        }
        break;
      }
    }
    lex.expect(']');
    v = Value::array(std::move(items));
  } else {
    v = Value::num(lex.number());
  }
  v.line = lex.line();
  return v;
}

Node parse_node_body(Lexer& lex, std::string name) {
  Node node;
  node.name = std::move(name);
  node.line = lex.line();
  lex.expect('{');
  while (true) {
    if (lex.peek() == '}') {
      lex.expect('}');
      break;
    }
    if (lex.eof()) lex.fail("unterminated block '" + node.name + "'");
    const int item_line = lex.line();
    std::string id = lex.ident();
    if (lex.peek() == '{') {
      node.children.push_back(parse_node_body(lex, std::move(id)));
    } else {
      lex.expect('=');
      if (node.find(id))
        lex.fail("duplicate key '" + id + "' in block '" + node.name + "'");
      Value v = parse_value(lex);
      v.line = item_line;
      node.entries.emplace_back(std::move(id), std::move(v));
    }
  }
  return node;
}

void write_value(std::ostringstream& out, const Value& v) {
  switch (v.kind) {
    case Value::Kind::Number:
      out << format_double(v.number);
      break;
    case Value::Kind::String: {
      out << '"';
      for (char c : v.str) {
        if (c == '"' || c == '\\') out << '\\';
        if (c == '\n') { out << "\\n"; continue; }
        out << c;
      }
      out << '"';
      break;
    }
    case Value::Kind::Array: {
      out << '[';
      for (size_t i = 0; i < v.items.size(); ++i) {
        if (i) out << ", ";
        write_value(out, v.items[i]);
      }
      out << ']';
      break;
    }
  }
}

void write_node(std::ostringstream& out, const Node& node, int depth) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  out << pad << node.name << " {\n";
  auto sorted = node.entries;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [k, v] : sorted) {
    out << pad << "  " << k << " = ";
    write_value(out, v);
    out << "\n";
  }
  for (const Node& c : node.children) write_node(out, c, depth + 1);
  out << pad << "}\n";
}

}  // namespace

Node parse(const std::string& text) {
  Lexer lex(text);
  if (lex.eof()) lex.fail("empty document");
  std::string name = lex.ident();
  Node root = parse_node_body(lex, std::move(name));
  if (!lex.eof()) lex.fail("trailing content after root block");
  return root;
}

std::string write(const Node& root) {
  std::ostringstream out;
  write_node(out, root, 0);
  return out.str();
}

}  // namespace stext
}  // namespace obia
