#include "nhf/jsonio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nhf {

namespace {

void dump_rec(const json& j, int indent, int depth, std::string* out) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string pad_close(static_cast<std::size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case json::value_t::null:
      *out += "null";
      break;
    case json::value_t::boolean:
      *out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: {
      *out += j.dump();
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        *out += "null";
      } else {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        *out += buf;
      }
      break;
    }
    case json::value_t::string:
      *out += json(j.get<std::string>()).dump();  // reuse the escaping rules
      break;
    case json::value_t::array: {
      if (j.empty()) {
        *out += "[]";
        break;
      }
      *out += "[";
      bool first = true;
      for (const auto& el : j) {
        *out += first ? "\n" : ",\n";
        first = false;
        *out += pad;
        dump_rec(el, indent, depth + 1, out);
      }
      *out += "\n" + pad_close + "]";
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        *out += "{}";
        break;
      }
      *out += "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        *out += first ? "\n" : ",\n";
        first = false;
        *out += pad + json(it.key()).dump() + ": ";
        dump_rec(it.value(), indent, depth + 1, out);
      }
      *out += "\n" + pad_close + "}";
      break;
    }
    default:
      *out += "null";
      break;
  }
}

}  // namespace

std::string dump_deterministic(const json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, &out);
  return out;
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, dump_deterministic(j) + "\n");
}

json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), Status::parse, "invalid JSON in " + path);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Status::parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), Status::parse, "cannot write " + path);
  out << text;
  require(out.good(), Status::internal, "short write to " + path);
}

}  // namespace nhf
