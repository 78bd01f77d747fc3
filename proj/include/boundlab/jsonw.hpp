// SPDX-License-Identifier: Apache-2.0
//
// Minimal JSON writer with a fixed field order and doubles printed with 17
// significant digits, so identical inputs serialize to identical bytes.

#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace boundlab {

class JsonWriter {
 public:
  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    comma();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    pending_value_ = true;
  }

  void value(double v) {
    comma();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out_ += buf;
  }
  void value(int v) {
    comma();
    out_ += std::to_string(v);
  }
  void value(long long v) {
    comma();
    out_ += std::to_string(v);
  }
  void value(unsigned long long v) {
    comma();
    out_ += std::to_string(v);
  }
  void value(bool v) {
    comma();
    out_ += v ? "true" : "false";
  }
  void value(const std::string& v) {
    comma();
    out_ += '"';
    out_ += v;  // callers only pass identifier-like strings
    out_ += '"';
  }
  void value(const char* v) { value(std::string(v)); }
  void null() {
    comma();
    out_ += "null";
  }

  template <typename T>
  void field(const std::string& k, const T& v) {
    key(k);
    value(v);
  }

  const std::string& str() const { return out_; }

 private:
  void open(char ch) {
    comma();
    out_ += ch;
    levels_.push_back(false);
  }
  void close(char ch) {
    out_ += ch;
    levels_.pop_back();
  }
  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!levels_.empty()) {
      if (levels_.back()) out_ += ',';
      levels_.back() = true;
    }
  }

  std::string out_;
  std::vector<bool> levels_;
  bool pending_value_ = false;
};

}  // namespace boundlab
