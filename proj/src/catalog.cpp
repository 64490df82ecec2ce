#include "qres/catalog.hpp"

#include <cctype>

#include "qres/error.hpp"

namespace qres {

AlgebraPtr d4_subspace(Field f)
{
    return QuiverAlgebra::create(f, {"1", "2", "3", "c"},
                                 std::vector<QuiverAlgebra::ArrowSpec>{{"b1", "1", "c"}, {"b2", "2", "c"}, {"b3", "3", "c"}});
}

AlgebraPtr a3_zero_relation(Field f)
{
    return QuiverAlgebra::create(f, {"1", "2", "3"},
                                 std::vector<QuiverAlgebra::ArrowSpec>{{"a1", "1", "2"}, {"a2", "2", "3"}},
                                 {{{1, {"a1", "a2"}}}});
}

AlgebraPtr dual_numbers(Field f)
{
    return QuiverAlgebra::create(f, {"1"}, std::vector<QuiverAlgebra::ArrowSpec>{{"x", "1", "1"}}, {{{1, {"x", "x"}}}});
}

AlgebraPtr commutative_square(Field f)
{
    return QuiverAlgebra::create(
        f, {"1", "2", "3", "4"},
        std::vector<QuiverAlgebra::ArrowSpec>{{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}},
        {{{1, {"a", "b"}}, {-1, {"c", "d"}}}});
}

AlgebraPtr named_algebra(const std::string& name, Field f)
{
    if (name == "k")
        return field_algebra(f);
    if (name == "D4")
        return d4_subspace(f);
    if (name == "A3/rad2")
        return a3_zero_relation(f);
    if (name == "dual")
        return dual_numbers(f);
    if (name == "square")
        return commutative_square(f);
    if (name.size() >= 2 && name[0] == 'A' && name.size() <= 3) {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
        if (digits) {
            const std::size_t n = std::stoul(name.substr(1));
            require(n >= 1, ErrorKind::ParseError, "A<n> needs n >= 1");
            return linear_quiver(f, n);
        }
    }
    fail(ErrorKind::ParseError, "unknown named algebra '" + name + "'");
}

std::vector<std::string> algebra_names()
{
    return {"k", "A<n>", "D4", "A3/rad2", "dual", "square"};
}

}  // namespace qres
