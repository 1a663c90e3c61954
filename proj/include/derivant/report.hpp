#pragma once

#include <string>
#include <variant>
#include <vector>

namespace derivant {

/// One report record: ordered key=value pairs, one line per record.
/// The canonical key order is kind, status, order, witness_count, trace,
/// provenance; further keys follow in insertion order.  Rendering is
/// deterministic byte for byte.
class Record {
public:
  struct Value {
    std::string scalar;
    std::vector<std::string> list;
    bool is_list = false;
    bool quoted = false;
  };

  Record &set(const std::string &key, const std::string &value) {
    entry(key).scalar = value;
    return *this;
  }

  Record &set(const std::string &key, std::uint64_t value) {
    return set(key, std::to_string(value));
  }

  Record &set_quoted(const std::string &key, const std::string &value) {
    Value &v = entry(key);
    v.scalar = value;
    v.quoted = true;
    return *this;
  }

  Record &set_list(const std::string &key, std::vector<std::string> values) {
    Value &v = entry(key);
    v.list = std::move(values);
    v.is_list = true;
    return *this;
  }

  std::string plain() const {
    std::string out;
    for (const auto &[key, value] : ordered()) {
      if (!out.empty())
        out += ' ';
      out += key;
      out += '=';
      if (value->is_list) {
        std::string joined;
        for (const std::string &item : value->list) {
          if (!joined.empty())
            joined += ',';
          joined += item;
        }
        out += joined.empty() ? "none" : joined;
      } else if (value->quoted) {
        out += '"' + value->scalar + '"';
      } else {
        out += value->scalar;
      }
    }
    return out;
  }

  std::string json_like() const {
    std::string out = "{";
    bool first = true;
    for (const auto &[key, value] : ordered()) {
      if (!first)
        out += ", ";
      first = false;
      out += key;
      out += '=';
      if (value->is_list) {
        out += '[';
        for (std::size_t i = 0; i < value->list.size(); ++i) {
          if (i)
            out += ',';
          out += value->list[i];
        }
        out += ']';
      } else if (value->quoted) {
        out += '"' + value->scalar + '"';
      } else {
        out += value->scalar;
      }
    }
    return out + "}";
  }

private:
  Value &entry(const std::string &key) {
    for (auto &[k, v] : fields_)
      if (k == key)
        return v;
    fields_.emplace_back(key, Value{});
    return fields_.back().second;
  }

  std::vector<std::pair<std::string, const Value *>> ordered() const {
    static const char *canon[] = {"kind", "status", "order",
                                  "witness_count", "trace", "provenance"};
    std::vector<std::pair<std::string, const Value *>> out;
    for (const char *key : canon)
      for (const auto &[k, v] : fields_)
        if (k == key)
          out.emplace_back(k, &v);
    for (const auto &[k, v] : fields_) {
      bool canonical = false;
      for (const char *key : canon)
        if (k == key)
          canonical = true;
      if (!canonical)
        out.emplace_back(k, &v);
    }
    return out;
  }

  std::vector<std::pair<std::string, Value>> fields_;
};

/// A full report: records rendered one per line.
struct Report {
  std::vector<Record> records;

  std::string render(bool json_like_form) const {
    std::string out;
    for (const Record &r : records)
      out += (json_like_form ? r.json_like() : r.plain()) + "\n";
    return out;
  }
};

} // namespace derivant
