#include <emul/errors.hh>
#include <emul/budget.hh>

#include <cstdlib>
#include <string>

using namespace emul;

using std::string;
using std::to_string;

ParseError::ParseError(int line, const string & message) :
    Error("line " + to_string(line) + ": " + message),
    _line(line)
{
}

UnknownVertex::UnknownVertex(const string & label) :
    Error("unknown vertex '" + label + "'")
{
}

UnknownEdge::UnknownEdge(const string & u, const string & v) :
    Error("unknown edge {" + u + ", " + v + "}")
{
}

DuplicateVertex::DuplicateVertex(const string & label) :
    Error("duplicate vertex '" + label + "'")
{
}

BudgetExceeded::BudgetExceeded(const string & where) :
    Error("search budget exhausted in " + where)
{
}

UnknownName::UnknownName(const string & name) :
    Error("unknown name '" + name + "'")
{
}

auto emul::budget_from_environment() -> std::uint64_t
{
    const char * text = std::getenv("EMUL_BUDGET");
    if (! text || ! *text)
        return default_node_budget;

    char * end = nullptr;
    auto value = std::strtoull(text, &end, 10);
    if (*end != '\0' || value == 0)
        return default_node_budget;
    return value;
}

NodeCounter::NodeCounter(std::uint64_t limit, string where) :
    _limit(limit),
    _where(std::move(where))
{
}

auto NodeCounter::tick() -> void
{
    if (++_used > _limit)
        throw BudgetExceeded(_where);
}
