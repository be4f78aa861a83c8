#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ragexec/dsl/ast.hpp"
#include "ragexec/retrieval/doc.hpp"

namespace ragexec::interp {

class Value;

using Sequence = std::shared_ptr<std::vector<Value>>;

// Insertion-ordered text-keyed mapping, matching the reference language's
// dict display order.
struct MappingData {
    std::vector<std::pair<std::string, Value>> entries;

    Value* find(const std::string& key);
    const Value* find(const std::string& key) const;
};
using Mapping = std::shared_ptr<MappingData>;

using DocSet = std::shared_ptr<DocumentSet>;

struct MatchObject {
    std::string matched;
};

struct FunctionValue {
    std::string name;
    std::vector<std::string> params;
    std::vector<dsl::StmtPtr> body;
};
using Function = std::shared_ptr<FunctionValue>;

class Value {
public:
    using Storage = std::variant<std::monostate, std::string, long long, bool,
                                 Sequence, Mapping, DocSet, MatchObject, Function>;

    Value() = default;
    explicit Value(Storage s) : storage_(std::move(s)) {}

    static Value null() { return Value{}; }
    static Value text(std::string s) { return Value{Storage{std::move(s)}}; }
    static Value integer(long long i) { return Value{Storage{i}}; }
    static Value boolean(bool b) { return Value{Storage{b}}; }
    static Value sequence(std::vector<Value> items) {
        return Value{Storage{std::make_shared<std::vector<Value>>(std::move(items))}};
    }
    static Value mapping() {
        return Value{Storage{std::make_shared<MappingData>()}};
    }
    static Value docs(DocumentSet d) {
        return Value{Storage{std::make_shared<DocumentSet>(std::move(d))}};
    }
    static Value match(std::string m) { return Value{Storage{MatchObject{std::move(m)}}}; }
    static Value function(Function f) { return Value{Storage{std::move(f)}}; }

    bool is_null() const { return std::holds_alternative<std::monostate>(storage_); }
    bool is_text() const { return std::holds_alternative<std::string>(storage_); }
    bool is_integer() const { return std::holds_alternative<long long>(storage_); }
    bool is_boolean() const { return std::holds_alternative<bool>(storage_); }
    bool is_sequence() const { return std::holds_alternative<Sequence>(storage_); }
    bool is_mapping() const { return std::holds_alternative<Mapping>(storage_); }
    bool is_docs() const { return std::holds_alternative<DocSet>(storage_); }
    bool is_match() const { return std::holds_alternative<MatchObject>(storage_); }
    bool is_function() const { return std::holds_alternative<Function>(storage_); }

    const std::string& as_text() const { return std::get<std::string>(storage_); }
    long long as_integer() const { return std::get<long long>(storage_); }
    bool as_boolean() const { return std::get<bool>(storage_); }
    const Sequence& as_sequence() const { return std::get<Sequence>(storage_); }
    const Mapping& as_mapping() const { return std::get<Mapping>(storage_); }
    const DocSet& as_docs() const { return std::get<DocSet>(storage_); }
    const MatchObject& as_match() const { return std::get<MatchObject>(storage_); }
    const Function& as_function() const { return std::get<Function>(storage_); }

    // Human-facing type name used in error messages ("str", "int", ...).
    std::string type_name() const;

    bool truthy() const;
    bool equals(const Value& other) const;

private:
    Storage storage_;
};

// str()-style rendering: text verbatim, everything else in display form.
std::string render_str(const Value& v);
// repr()-style rendering: text quoted; used for container elements and traces.
std::string render_repr(const Value& v);

} // namespace ragexec::interp
