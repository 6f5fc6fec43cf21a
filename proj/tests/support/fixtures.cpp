#include "fixtures.hpp"

namespace fixture {

LowerProbability coin(const std::string& h, const std::string& t, const Rational& l) {
  SetFunction sf(Frame({h, t}));
  sf.set(Event(1, 2), l);
  sf.set(Event(2, 2), l);
  sf.set(Event(3, 2), Rational(1));
  return LowerProbability::from(std::move(sf));
}

ProductFrame coin_split() { return ProductFrame(Frame({"h1", "t1"}), Frame({"h2", "t2"})); }
LowerProbability coin1(const Rational& l) { return coin("h1", "t1", l); }
LowerProbability coin2(const Rational& l) { return coin("h2", "t2", l); }

LowerProbability coins_type1() { return product_type1_envelope(coin_split(), coin1(), coin2()); }
LowerProbability coins_type2() { return product_type2(coin_split(), coin1(), coin2()); }

Distribution dist(const Frame& f, std::vector<Rational> m) { return Distribution(f, std::move(m)); }

Distribution correlated() {
  return dist(coin_split().joint(), {Rational(7, 16), Rational(1, 16), Rational(1, 16), Rational(7, 16)});
}
Distribution anticorrelated() {
  return dist(coin_split().joint(), {Rational(1, 16), Rational(7, 16), Rational(7, 16), Rational(1, 16)});
}

Frame monty_frame() {
  return Frame({"123", "132", "124", "142", "134", "143", "234", "243", "324", "342", "423", "432"});
}

Event ev(const Frame& f, std::initializer_list<std::string_view> labels) { return f.event_of(labels); }

LowerProbability monty_hall() {
  const Frame f = monty_frame();
  SetFunction m(f);
  const Rational a(1, 12), b(1, 4);
  m.set(ev(f, {"123", "132"}), a);
  m.set(ev(f, {"124", "142"}), a);
  m.set(ev(f, {"134", "143"}), a);
  m.set(ev(f, {"234", "243"}), b);
  m.set(ev(f, {"324", "342"}), b);
  m.set(ev(f, {"423", "432"}), b);
  return LowerProbability::from(inverse_mobius(MobiusMass(std::move(m))));
}

}  // namespace fixture
