#pragma once

#include "tanerve/ainfty.hpp"

#include <memory>

namespace tanerve::fixtures {

// One object *, degree-0 basis {1, e}, degree-1 basis {h}, m_1 = 0,
// all non-unit m_2 products zero, m_3(e,e,e) = h. Passes the relation
// checker; the only non-dg shipped category.
AInftyCategory m3_category(const Field& field, SignConvention conv);

// Two objects {0, 1}. hom(0,0) has degree-0 basis {1_0, e} and degree-1
// basis {h} with dh = e; hom(0,1) is spanned by f in degree 0; all non-unit
// products vanish. A dg-category with a nonzero differential.
AInftyCategory dgmix_category(const Field& field, SignConvention conv);

// One object, degree-0 basis {1, a, b}, m_2(a,a) = b, m_2(a,b) = a,
// everything else zero: fails the Stasheff relation exactly at k = 3.
AInftyCategory nonassoc_category(const Field& field, SignConvention conv);

// Endofunctor of the m3 category: f_0 = id, f_1 = id, f_2(e,e) = h.
AInftyFunctor m3_f2_endofunctor(std::shared_ptr<const AInftyCategory> m3);

}  // namespace tanerve::fixtures
