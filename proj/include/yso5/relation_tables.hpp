#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yso5/check.hpp"
#include "yso5/surd_op.hpp"

namespace yso5 {

struct TableEntry {
    std::string id;
    std::string expand;  // "", "s" or "a"
    std::vector<std::string> chain;
    std::optional<std::vector<std::string>> printed_chain;
    std::optional<std::string> printed;
    std::optional<std::string> note;
};

struct RelationTable {
    std::string name;
    std::string alias;
    std::string title;
    bool has_n = false;
    std::vector<TableEntry> entries;
};

// One template instantiation of an entry.
struct TableInstance {
    std::string tag;  // "", "p", "m" or "3"
    std::vector<std::string> chain;
};

std::string_view embedded_relation_tables_json();
const std::vector<RelationTable>& relation_tables();
// Looks up by name ("cw-level1") or alias ("cw1"); throws ParseError when unknown.
const RelationTable& relation_table(std::string_view name_or_alias);

std::vector<TableInstance> expand_entry(const TableEntry& e, bool printed = false);

// Resolves Name^level to an operator. Names are the Cartan–Weyl and component
// names of the relation corpus, plus adjoint generators "I12".."I45".
using SymbolResolver = std::function<SurdOp(std::string_view name, int level)>;

// Wraps a resolver with a memo keyed on (name, level).
SymbolResolver cached(SymbolResolver inner);

SurdOp evaluate_expression(std::string_view text, const SymbolResolver& resolve, size_t dim,
                           std::optional<int> n = std::nullopt);

// Every chain member is compared against the first one, for each n in n_values
// (ignored when the table has no n). Corrected entries with an evaluable
// printed form add a Measured result for the printed chain.
std::vector<CheckResult> check_table(const RelationTable& table, const SymbolResolver& resolve, size_t dim,
                                     const std::vector<int>& n_values, const std::string& suite);

}  // namespace yso5
