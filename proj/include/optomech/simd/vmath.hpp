#pragma once

// Portable transcendental kernels over lane packs. Each function is a fixed
// sequence of correctly-rounded IEEE operations, so all backends produce
// bit-identical lanes. Accuracy is a few ulp, which is far below the Monte
// Carlo noise floor of the consumers.

#include "optomech/simd/pack.hpp"

namespace optomech::simd {

// Natural log for x in (0, 1]; not valid for x <= 0, inf, or subnormals.
// Mantissa is reduced to [sqrt(2)/2, sqrt(2)) and ln f = 2 atanh(s) is
// evaluated as an odd series in s = (f-1)/(f+1), |s| <= 0.1716.
template <class P>
P vlog(P x) {
    using U = typename P::u64;
    const U bits = P::to_bits_pack(x);
    const U exp_bits = bits.template shr<52>();
    // mantissa with exponent forced to 0 -> f in [1, 2)
    const U mant = (bits & U::broadcast(0x000FFFFFFFFFFFFFull)) | U::broadcast(0x3FF0000000000000ull);
    P f = P::from_bits_pack(mant);
    P e = P::from_u52(exp_bits) - P::broadcast(1023.0);

    const P sqrt2 = P::broadcast(1.41421356237309514547462185873883);
    const P gt = cmp_gt(f, sqrt2);
    f = select(gt, f * P::broadcast(0.5), f);
    e = select(gt, e + P::broadcast(1.0), e);

    const P s = (f - P::broadcast(1.0)) / (f + P::broadcast(1.0));
    const P z = s * s;
    P poly = P::broadcast(2.0 / 19.0);
    poly = P::fma(poly, z, P::broadcast(2.0 / 17.0));
    poly = P::fma(poly, z, P::broadcast(2.0 / 15.0));
    poly = P::fma(poly, z, P::broadcast(2.0 / 13.0));
    poly = P::fma(poly, z, P::broadcast(2.0 / 11.0));
    poly = P::fma(poly, z, P::broadcast(2.0 / 9.0));
    poly = P::fma(poly, z, P::broadcast(2.0 / 7.0));
    poly = P::fma(poly, z, P::broadcast(2.0 / 5.0));
    poly = P::fma(poly, z, P::broadcast(2.0 / 3.0));
    poly = P::fma(poly, z, P::broadcast(2.0));
    const P lnf = s * poly;

    const P ln2_hi = P::broadcast(6.93147180369123816490e-01);
    const P ln2_lo = P::broadcast(1.90821492927058770002e-10);
    return P::fma(e, ln2_lo, P::fma(e, ln2_hi, lnf));
}

// sin(2 pi u) and cos(2 pi u) for u in [0, 1).
template <class P>
void vsincos_2pi(P u, P& sin_out, P& cos_out) {
    const P t = u * P::broadcast(4.0);
    const P k = P::floor(t + P::broadcast(0.5));  // nearest quadrant, k in {0..4}
    const P f = t - k;                            // f in [-0.5, 0.5]
    const P phi = f * P::broadcast(1.57079632679489661923);
    const P y = phi * phi;

    P sp = P::broadcast(-7.64716373181981647590e-13);  // -1/15!
    sp = P::fma(sp, y, P::broadcast(1.60590438368216145994e-10));   //  1/13!
    sp = P::fma(sp, y, P::broadcast(-2.50521083854417187751e-08));  // -1/11!
    sp = P::fma(sp, y, P::broadcast(2.75573192239858906526e-06));   //  1/9!
    sp = P::fma(sp, y, P::broadcast(-1.98412698412698412698e-04));  // -1/7!
    sp = P::fma(sp, y, P::broadcast(8.33333333333333333333e-03));   //  1/5!
    sp = P::fma(sp, y, P::broadcast(-1.66666666666666666667e-01));  // -1/3!
    const P s = P::fma(sp * y, phi, phi);

    P cp = P::broadcast(4.77947733238738529744e-14);  //  1/16!
    cp = P::fma(cp, y, P::broadcast(-1.14707455977297247139e-11));  // -1/14!
    cp = P::fma(cp, y, P::broadcast(2.08767569878680989792e-09));   //  1/12!
    cp = P::fma(cp, y, P::broadcast(-2.75573192239858906526e-07));  // -1/10!
    cp = P::fma(cp, y, P::broadcast(2.48015873015873015873e-05));   //  1/8!
    cp = P::fma(cp, y, P::broadcast(-1.38888888888888888889e-03));  // -1/6!
    cp = P::fma(cp, y, P::broadcast(4.16666666666666666667e-02));   //  1/4!
    cp = P::fma(cp, y, P::broadcast(-5.00000000000000000000e-01));  // -1/2!
    const P c = P::fma(cp, y, P::broadcast(1.0));

    // Rotate (c, s) by the quadrant. k == 4 wraps to quadrant 0.
    const P one = P::broadcast(1.0);
    const P m1 = cmp_eq(k, one);
    const P m2 = cmp_eq(k, P::broadcast(2.0));
    const P m3 = cmp_eq(k, P::broadcast(3.0));
    sin_out = select(m1, c, select(m2, -s, select(m3, -c, s)));
    cos_out = select(m1, -s, select(m2, -c, select(m3, s, c)));
}

}  // namespace optomech::simd
