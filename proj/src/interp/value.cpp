#include "ragexec/interp/value.hpp"

#include <sstream>

namespace ragexec::interp {

Value* MappingData::find(const std::string& key) {
    for (auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

const Value* MappingData::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

std::string Value::type_name() const {
    if (is_null()) return "NoneType";
    if (is_text()) return "str";
    if (is_integer()) return "int";
    if (is_boolean()) return "bool";
    if (is_sequence()) return "list";
    if (is_mapping()) return "dict";
    if (is_docs()) return "docs";
    if (is_match()) return "match";
    return "function";
}

bool Value::truthy() const {
    if (is_null()) return false;
    if (is_text()) return !as_text().empty();
    if (is_integer()) return as_integer() != 0;
    if (is_boolean()) return as_boolean();
    if (is_sequence()) return !as_sequence()->empty();
    if (is_mapping()) return !as_mapping()->entries.empty();
    if (is_docs()) return !as_docs()->docs.empty();
    return true;
}

bool Value::equals(const Value& other) const {
    if (is_null() && other.is_null()) return true;
    if (is_text() && other.is_text()) return as_text() == other.as_text();
    // bool == int follows the reference language (True == 1)
    if ((is_integer() || is_boolean()) && (other.is_integer() || other.is_boolean())) {
        long long a = is_boolean() ? (as_boolean() ? 1 : 0) : as_integer();
        long long b = other.is_boolean() ? (other.as_boolean() ? 1 : 0)
                                         : other.as_integer();
        return a == b;
    }
    if (is_sequence() && other.is_sequence()) {
        const auto& a = *as_sequence();
        const auto& b = *other.as_sequence();
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); i++)
            if (!a[i].equals(b[i])) return false;
        return true;
    }
    if (is_mapping() && other.is_mapping()) {
        const auto& a = as_mapping()->entries;
        const auto& b = *other.as_mapping();
        if (a.size() != b.entries.size()) return false;
        for (const auto& [k, v] : a) {
            const Value* bv = b.find(k);
            if (!bv || !v.equals(*bv)) return false;
        }
        return true;
    }
    return false;
}

namespace {

std::string quote_repr(const std::string& s) {
    bool has_single = s.find('\'') != std::string::npos;
    bool has_double = s.find('"') != std::string::npos;
    char quote = (has_single && !has_double) ? '"' : '\'';
    std::string out(1, quote);
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (c == quote) {
                    out += '\\';
                    out += c;
                } else {
                    out += c;
                }
        }
    }
    out += quote;
    return out;
}

std::string render_container(const Value& v) {
    std::ostringstream out;
    if (v.is_sequence()) {
        out << '[';
        const auto& items = *v.as_sequence();
        for (std::size_t i = 0; i < items.size(); i++) {
            if (i) out << ", ";
            out << render_repr(items[i]);
        }
        out << ']';
    } else {
        out << '{';
        const auto& entries = v.as_mapping()->entries;
        for (std::size_t i = 0; i < entries.size(); i++) {
            if (i) out << ", ";
            out << quote_repr(entries[i].first) << ": " << render_repr(entries[i].second);
        }
        out << '}';
    }
    return out.str();
}

} // namespace

std::string render_str(const Value& v) {
    if (v.is_text()) return v.as_text();
    return render_repr(v);
}

std::string render_repr(const Value& v) {
    if (v.is_null()) return "None";
    if (v.is_text()) return quote_repr(v.as_text());
    if (v.is_integer()) return std::to_string(v.as_integer());
    if (v.is_boolean()) return v.as_boolean() ? "True" : "False";
    if (v.is_sequence() || v.is_mapping()) return render_container(v);
    if (v.is_docs()) {
        const auto& d = *v.as_docs();
        std::ostringstream out;
        out << "<docs query=" << quote_repr(d.query) << " k=" << d.k
            << " n=" << d.docs.size() << ">";
        return out.str();
    }
    if (v.is_match()) return "<match " + quote_repr(v.as_match().matched) + ">";
    return "<function " + v.as_function()->name + ">";
}

} // namespace ragexec::interp
