#pragma once

// Deterministic JSON output for verification reports: object keys are
// emitted in sorted order, floating-point values in fixed %.12e form, so two
// runs over the same data produce byte-identical files.

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ccsurf {

class Json {
  public:
    static Json object() { return Json(Kind::Object); }
    static Json array() { return Json(Kind::Array); }
    static Json str(std::string s) {
        Json j(Kind::Str);
        j.str_ = std::move(s);
        return j;
    }
    static Json num(double x) {
        Json j(Kind::Num);
        j.num_ = x;
        return j;
    }
    static Json integer(long long n) {
        Json j(Kind::Int);
        j.int_ = n;
        return j;
    }
    static Json boolean(bool b) {
        Json j(Kind::Bool);
        j.bool_ = b;
        return j;
    }

    Json& set(const std::string& key, Json value) {
        fields_[key] = std::make_shared<Json>(std::move(value));
        return *this;
    }
    Json& push(Json value) {
        items_.push_back(std::make_shared<Json>(std::move(value)));
        return *this;
    }

    std::string dump(int indent = 0) const {
        std::string out;
        write(out, indent);
        out.push_back('\n');
        return out;
    }

  private:
    enum class Kind { Object, Array, Str, Num, Int, Bool };

    explicit Json(Kind k) : kind_(k) {}

    static void escape(std::string& out, const std::string& s) {
        out.push_back('"');
        for (char ch : s) {
            switch (ch) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(ch) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                        out += buf;
                    } else {
                        out.push_back(ch);
                    }
            }
        }
        out.push_back('"');
    }

    void write(std::string& out, int depth) const {
        const std::string pad(static_cast<size_t>(depth) * 2, ' ');
        const std::string pad_in(static_cast<size_t>(depth + 1) * 2, ' ');
        switch (kind_) {
            case Kind::Object: {
                if (fields_.empty()) {
                    out += "{}";
                    return;
                }
                out += "{\n";
                size_t i = 0;
                for (const auto& [key, val] : fields_) {
                    out += pad_in;
                    escape(out, key);
                    out += ": ";
                    val->write(out, depth + 1);
                    if (++i < fields_.size()) out.push_back(',');
                    out.push_back('\n');
                }
                out += pad + "}";
                return;
            }
            case Kind::Array: {
                if (items_.empty()) {
                    out += "[]";
                    return;
                }
                out += "[\n";
                for (size_t i = 0; i < items_.size(); ++i) {
                    out += pad_in;
                    items_[i]->write(out, depth + 1);
                    if (i + 1 < items_.size()) out.push_back(',');
                    out.push_back('\n');
                }
                out += pad + "]";
                return;
            }
            case Kind::Str: escape(out, str_); return;
            case Kind::Num: {
                if (!std::isfinite(num_)) {
                    out += "null";  // JSON has no inf/nan literals
                    return;
                }
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.12e", num_);
                out += buf;
                return;
            }
            case Kind::Int: out += std::to_string(int_); return;
            case Kind::Bool: out += bool_ ? "true" : "false"; return;
        }
    }

    Kind kind_;
    std::map<std::string, std::shared_ptr<Json>> fields_;
    std::vector<std::shared_ptr<Json>> items_;
    std::string str_;
    double num_ = 0.0;
    long long int_ = 0;
    bool bool_ = false;
};

}  // namespace ccsurf
