#pragma once

#include <string>
#include <utility>
#include <vector>

namespace obia {
namespace stext {

// Structured-text document tree: named blocks of key/value entries, child
// blocks and arrays. Used for rule sets, scene specs and trained models.
//
//   name {
//     key = 1.5
//     label = "text"
//     weights = [0.25, 1, -3]
//     child { ... }
//   }
//
// '#' starts a comment running to end of line. The canonical writer emits
// key/value entries sorted by key, then child blocks in insertion order,
// with shortest-round-trip number formatting, so serialize(parse(s)) is
// byte-identical to serialize of the original tree.

struct Value {
  enum class Kind { Number, String, Array };
  Kind kind = Kind::Number;
  double number = 0.0;
  std::string str;
  std::vector<Value> items;
  int line = 0;

  static Value num(double v) {
    Value x;
    x.kind = Kind::Number;
    x.number = v;
    return x;
  }
  static Value text(std::string s) {
    Value x;
    x.kind = Kind::String;
    x.str = std::move(s);
    return x;
  }
  static Value array(std::vector<Value> v) {
    Value x;
    x.kind = Kind::Array;
    x.items = std::move(v);
    return x;
  }
  static Value num_array(const std::vector<double>& v);
  static Value str_array(const std::vector<std::string>& v);

  bool operator==(const Value& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::Number: return number == o.number;
      case Kind::String: return str == o.str;
      case Kind::Array: return items == o.items;
    }
    return false;
  }
};

struct Node {
  std::string name;
  std::vector<std::pair<std::string, Value>> entries;
  std::vector<Node> children;
  int line = 0;

  // Lookup helpers; "required" variants throw ParseError naming the field.
  const Value* find(const std::string& key) const;
  double get_number(const std::string& key) const;
  double get_number_or(const std::string& key, double fallback) const;
  const std::string& get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key, const std::string& fb) const;
  std::vector<double> get_numbers(const std::string& key) const;
  std::vector<std::string> get_strings(const std::string& key) const;
  const Node* find_child(const std::string& name) const;
  std::vector<const Node*> find_children(const std::string& name) const;

  void set(const std::string& key, Value v) { entries.emplace_back(key, std::move(v)); }
};

Node parse(const std::string& text);
std::string write(const Node& root);

}  // namespace stext
}  // namespace obia
