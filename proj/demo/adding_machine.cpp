// Tour of the library on the two smallest interesting automata: the
// 2-state sausage automaton (whose active generator is the inverse
// adding machine) and the finite cyclic time-varying family.

#include <tvaut/tvaut.hpp>

#include <iostream>

using namespace tvaut;

int main() {
    Automaton sausage = sausage_mealy(2);
    Element a2 = Element::generator(sausage, 1);

    std::cout << "sausage(2), generator a2 acting on constant words:\n";
    for (const char* w : {"000", "111", "0101"})
        std::cout << "  a2(" << w << ") = " << format_word(image(a2, parse_word(w, 2)))
                  << '\n';

    WreathRecursion wr = wreath(a2);
    std::cout << "wreath recursion of a2: root swaps the letters, section at 0 has "
              << wr.sections[0].length() << " factor(s)\n";

    std::cout << "a2 squared is trivial? "
              << (is_identity(power(a2, 2)).is_identity ? "yes" : "no") << '\n';
    OrderResult r = order_pow2(a2, 12);
    std::cout << "order of a2: " << (r.finite() ? std::to_string(r.order()) : "beyond 2^12")
              << '\n';
    std::cout << "group of sausage(2): "
              << to_string(classify_abelian_mealy(sausage, 12, 2)) << "\n\n";

    std::cout << "cyclic time-varying family, generator a2 at step 1:\n";
    for (int rr = 1; rr <= 4; ++rr) {
        Automaton c = cyclic_tva(rr);
        OrderResult o = order_pow2(Element::generator(c, 1), 10);
        std::cout << "  r = " << rr << ": order " << o.order() << '\n';
    }
    Automaton c_inf = cyclic_tva(std::nullopt);
    OrderResult o_inf = order_pow2(Element::generator(c_inf, 1), 10);
    std::cout << "  infinite variant: "
              << (o_inf.finite() ? std::to_string(o_inf.order()) : "no power up to 2^10 is trivial")
              << '\n';
    return 0;
}
