#include "schema_check.hpp"

#include <stdexcept>

namespace schema {

namespace {

using lexeval::Json;

bool has_type(const Json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  throw std::invalid_argument("unsupported schema type '" + type + "'");
}

class Checker {
 public:
  explicit Checker(const Json& root) : root_(root) {}

  void check(const Json& v, const Json& s, const std::string& where) {
    if (const auto ref = s.find("$ref"); ref != s.end()) {
      check(v, resolve(ref->get<std::string>()), where);
      return;
    }
    if (const auto t = s.find("type"); t != s.end()) {
      bool ok = false;
      if (t->is_array()) {
        for (const auto& alt : *t) ok = ok || has_type(v, alt.get<std::string>());
      } else {
        ok = has_type(v, t->get<std::string>());
      }
      if (!ok) {
        fail(where, "expected type " + t->dump());
        return;
      }
    }
    if (const auto e = s.find("enum"); e != s.end()) {
      bool found = false;
      for (const auto& option : *e) found = found || option == v;
      if (!found) fail(where, "value " + v.dump() + " not in enum");
    }
    if (v.is_number()) {
      const double x = v.get<double>();
      if (const auto m = s.find("minimum"); m != s.end() && x < m->get<double>()) fail(where, "below minimum");
      if (const auto m = s.find("maximum"); m != s.end() && x > m->get<double>()) fail(where, "above maximum");
    }
    if (v.is_object()) {
      if (const auto req = s.find("required"); req != s.end()) {
        for (const auto& key : *req) {
          if (!v.contains(key.get<std::string>())) fail(where, "missing required '" + key.get<std::string>() + "'");
        }
      }
      const auto props = s.find("properties");
      const auto extra = s.find("additionalProperties");
      for (const auto& [key, value] : v.items()) {
        if (props != s.end() && props->contains(key)) {
          check(value, (*props)[key], where + "/" + key);
        } else if (extra != s.end() && extra->is_boolean() && !extra->get<bool>()) {
          fail(where, "unexpected property '" + key + "'");
        }
      }
    }
    if (v.is_array()) {
      if (const auto items = s.find("items"); items != s.end()) {
        for (std::size_t i = 0; i < v.size(); ++i) check(v[i], *items, where + "/" + std::to_string(i));
      }
    }
  }

  std::vector<std::string> errors;

 private:
  const Json& resolve(const std::string& ref) {
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("unsupported $ref '" + ref + "'");
    return root_.at("$defs").at(ref.substr(prefix.size()));
  }

  void fail(const std::string& where, const std::string& what) {
    errors.push_back((where.empty() ? "/" : where) + ": " + what);
  }

  const Json& root_;
};

}  // namespace

std::vector<std::string> validate(const lexeval::Json& doc, const lexeval::Json& schema) {
  Checker c(schema);
  c.check(doc, schema, "");
  return std::move(c.errors);
}

}  // namespace schema
