#include "tanerve/fixtures.hpp"

namespace tanerve::fixtures {

AInftyCategory m3_category(const Field& field, SignConvention conv) {
  CategoryBuilder b(field, conv);
  b.add_object("*");
  b.add_hom("*", "*", 0, {"1", "e"});
  b.add_hom("*", "*", 1, {"h"});
  b.set_unit("*", "1");
  b.add_mult(3,
             {{"*", "*", 0, "e"}, {"*", "*", 0, "e"}, {"*", "*", 0, "e"}},
             "h", Scalar::one(field));
  return b.build();
}

AInftyCategory dgmix_category(const Field& field, SignConvention conv) {
  CategoryBuilder b(field, conv);
  b.add_object("0");
  b.add_object("1");
  b.add_hom("0", "0", 0, {"1_0", "e"});
  b.add_hom("0", "0", 1, {"h"});
  b.add_hom("0", "1", 0, {"f"});
  b.add_hom("1", "1", 0, {"1_1"});
  b.set_unit("0", "1_0");
  b.set_unit("1", "1_1");
  b.add_mult(1, {{"0", "0", 1, "h"}}, "e", Scalar::one(field));
  return b.build();
}

AInftyCategory nonassoc_category(const Field& field, SignConvention conv) {
  CategoryBuilder b(field, conv);
  b.add_object("*");
  b.add_hom("*", "*", 0, {"1", "a", "b"});
  b.set_unit("*", "1");
  b.add_mult(2, {{"*", "*", 0, "a"}, {"*", "*", 0, "a"}}, "b",
             Scalar::one(field));
  b.add_mult(2, {{"*", "*", 0, "a"}, {"*", "*", 0, "b"}}, "a",
             Scalar::one(field));
  return b.build();
}

AInftyFunctor m3_f2_endofunctor(std::shared_ptr<const AInftyCategory> m3) {
  AInftyFunctor f(m3, m3, {0});
  const auto& cat = *m3;
  int e = cat.label_id(0, 0, 0, "e");
  int h = cat.label_id(0, 0, 1, "h");
  f.add_component(1, FactorTuple{{0, 0}, {0}, {e}}, e,
                  Scalar::one(cat.field()));
  f.add_component(1, FactorTuple{{0, 0}, {1}, {h}}, h,
                  Scalar::one(cat.field()));
  f.add_component(2, FactorTuple{{0, 0, 0}, {0, 0}, {e, e}}, h,
                  Scalar::one(cat.field()));
  return f;
}

}  // namespace tanerve::fixtures
