"""Compiled kernels for sect163k1 over GF(2^163).

Generated by scripts/gen_kernels.py -- do not edit by hand.
"""

import numpy as np

try:
    from numba import njit, uint64
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*a, **k):  # pragma: no cover
        def deco(fn):
            return fn
        return deco

    uint64 = int  # pragma: no cover

W = 3
M = 163
NBYTES = 21
CURVE = "sect163k1"

# half-trace of z^i (canonical root, coefficient 0 clear), i = 0..M-1
_HT_BITS = (
    0x0, 0x28eb9a3a65dfe99774db0914dd3609e5f24c5508a, 0x28eb9a3a65dfe99774db0914dd3609e5f24c55088, 0x6436c505a9b24991bd341d41143652e5366593342,
    0x28eb9a3a65dfe99774db0914dd3609e5f24c5508c, 0x20d2d706578ae1b30ac8af6b7b8a0198b76b5828, 0x6436c505a9b24991bd341d41143652e536659334a, 0x251e3edeea0805c86cfc8708459dec18a54de4ae,
    0x28eb9a3a65dfe99774db0914dd3609e5f24c5509c, 0x4f2c70eefe6b968604b75f2f090d8e39085755910, 0x20d2d706578ae1b30ac8af6b7b8a0198b76b5808, 0x104960d005c283936004c9af62c83bf0081e80,
    0x6436c505a9b24991bd341d41143652e536659330a, 0x646b0b1f674ee83163a75f82c9c39e896eac85b2c, 0x251e3edeea0805c86cfc8708459dec18a54de42e, 0x647fc413e930c0f0c8549e69b17f6e6994d9b2502,
    0x28eb9a3a65dfe99774db0914dd3609e5f24c5519c, 0x2abb7950cf5be6389e368121b37aebb029ffe10b4, 0x4f2c70eefe6b968604b75f2f090d8e39085755b10, 0x4e8cb8c36ae9f3951ef6dc2c39bb1af6a892e4038,
    0x20d2d706578ae1b30ac8af6b7b8a0198b76b5c08, 0x4ed176d9a4155235c0749eefe44ed7daf05df253e, 0x104960d005c283936004c9af62c83bf0081680, 0x2abb2d1d7536be6df3b4c11a64f254496ce0575b2,
    0x6436c505a9b24991bd341d41143652e536659230a, 0x4f64253250a0c841e2669c7981d970b8ae37621be, 0x646b0b1f674ee83163a75f82c9c39e896eac87b2c, 0x20d7d2c96312595093b8ac410d30bb72084ed7a8,
    0x251e3edeea0805c86cfc8708459dec18a54da42e, 0x65db145ace68d4e09ff65dec6f0be8752b012460c, 0x647fc413e930c0f0c8549e69b17f6e6994d9ba502, 0x295e9d9c2b072ba23f0a0bb96f289b1ee93f66cbc,
    0x28eb9a3a65dfe99774db0914dd3609e5f24c4519c, 0x2ae6f30728ca1fe928fcc3c9fd05c8441caf13db2, 0x2abb7950cf5be6389e368121b37aebb029ffc10b4, 0x662a3b8bfc6ee26042ae1696af062d4ce76fe6f8a,
    0x4f2c70eefe6b968604b75f2f090d8e39085715b10, 0x2ae6e716e3eecc03eef4c3d0dde507f2c2c3775b2, 0x4e8cb8c36ae9f3951ef6dc2c39bb1af6a89264038, 0x2af3299c79262baacb41027a3b69bbfd935631d1c,
    0x20d2d706578ae1b30ac8af6b7b8a0198b77b5c08, 0x2aba79d78b7f69cbf2148164596fd70478188b434, 0x4ed176d9a4155235c0749eefe44ed7daf05ff253e, 0x678eebc2db36f6700508d5137172bbd058a721e84,
    0x104960d005c283936004c9af62c83bf0481680, 0x663bbc3876a7bfdfe05ad78c74064f05f80c91a04, 0x2abb2d1d7536be6df3b4c11a64f254496ce8575b2, 0x4c80c179f0d88a282b7856a4b79e34823f109b8b0,
    0x6436c505a9b24991bd341d41143652e536759230a, 0x4d348705caff0cde97a6146a78d97d990cd9827b6, 0x4f64253250a0c841e2669c7981d970b8ae17621be, 0x20d793ddf15f65e5d6ecacd60311de0ce790390e,
    0x646b0b1f674ee83163a75f82c9c39e896eec87b2c, 0x2b427702b1ff577e5bfd4077bcf7c1e1d1614269a, 0x20d7d2c96312595093b8ac410d30bb72004ed7a8, 0x4c18f5f2ee338d2933c3ef89b6fc3038009de2e,
    0x251e3edeea0805c86cfc8708459dec18b54da42e, 0x1f95b1e805badc991188169b42ad43342d6b6e08, 0x65db145ace68d4e09ff65dec6f0be87529012460c, 0x4f612dd0205e33471c5d9caa99067afeeae8cf01e,
    0x647fc413e930c0f0c8549e69b17f6e6990d9ba502, 0x65cac2b0b67a5b6200269cc0d3446f09004642182, 0x295e9d9c2b072ba23f0a0bb96f289b1ee13f66cbc, 0x4d211dc2fe5ab32304a4d5fb51dd4f8f0843d44b8,
    0x28eb9a3a65dfe99774db0914dd3609e5e24c4519c, 0x3e5f1dc2eea5ef67383ca85bc972123fcebc7e2e, 0x2ae6f30728ca1fe928fcc3c9fd05c8443caf13db2, 0x65cbc237f25ec4916c04dc853941539d00a11c484,
    0x2abb7950cf5be6389e368121b37aebb069ffc10b4, 0x28a6d74168a3709d59a28a83ea353e2ed3308a2b4, 0x662a3b8bfc6ee26042ae1696af062d4c676fe6f8a, 0x678ba37c9f81c381781a95e2b2ea9098df95a5b82,
    0x4f2c70eefe6b968604b75f2f090d8e38085715b10, 0x4d35c3dea3b64ddbceb81405490b44779edf2f936, 0x2ae6e716e3eecc03eef4c3d0dde507f0c2c3775b2, 0x4cdd0b363248c16edc15546cb5c842915af4dff90,
    0x4e8cb8c36ae9f3951ef6dc2c39bb1af2a89264038, 0x6582c224b35e04430c97dfa95d3c37da68d01dd24, 0x2af3299c79262baacb41027a3b69bbf5935631d1c, 0x4ed57bbd8c7d2312fcbfde755e8e847257d231518,
    0x20d2d706578ae1b30ac8af6b7b8a0098b77b5c08, 0x4cdd5e3acdbff9b5dc1414510b2402db5be1da336, 0x2aba79d78b7f69cbf2148164596fd72478188b434, 0x4d215d9e9b13389d341b55d9beb52e208321e0110,
    0x4ed176d9a4155235c0749eefe44ed79af05ff253e, 0x6666266f0236462a5309d5747e7b3e90e5da303a4, 0x678eebc2db36f6700508d5137172bb5058a721e84, 0x67c7eec5d290acca25701632a4d897cb14fceb10a,
    0x104960d005c283936004c9af62d83bf0481680, 0x6583c6b2be4e586b35815fe5c6ca1b09d3d394dac, 0x663bbc3876a7bfdfe05ad78c74064d05f80c91a04, 0x6582927850078fcda6811f9beb57d844d70980c2a,
    0x2abb2d1d7536be6df3b4c11a64f250496ce8575b2, 0x4f74f64b3520424cc5b15d1d73454cdcbd944ed90, 0x4c80c179f0d88a282b7856a4b79e3c823f109b8b0, 0x662f336898901cb47fa55645efd3462a810d85fac,
    0x6436c505a9b24991bd341d41143642e536759230a, 0x678fbb196d5bf20c713e9564380c6daaaa91b4982, 0x4d348705caff0cde97a6146a78d95d990cd9827b6, 0x4ccd8c46b9ed2a0bee38d5312b9c3764c7bafbeb8,
    0x4f64253250a0c841e2669c7981d930b8ae17621be, 0x28a2ce60dea2782f18db8a03cfd3776bf7ed05794, 0x20d793ddf15f65e5d6ecacd60319de0ce790390e, 0x4f6564e8345f8c8a837c9c1aec80e2b8968196d3e,
    0x646b0b1f674ee83163a75f82c9c29e896eec87b2c, 0x2aabee6587b630a29bd8006e9a638e6c60625683c, 0x2b427702b1ff577e5bfd4077bcf5c1e1d1614269a, 0x64224b550717aa625abb9c8cabc32a1185aa7c6a2,
    0x20d7d2c96312595093b8ac410d70bb72004ed7a8, 0x29035383a1fb95ad89e9097a5ad1e052f0789d51c, 0x4c18f5f2ee338d2933c3ef89befc3038009de2e, 0x4f3cb2970d7951fa78289e5fb7bc0887cb937df3e,
    0x251e3edeea0805c86cfc8708449dec18b54da42e, 0x294b020f425d1e3737548a27e9eb94a980b3ab434, 0x1f95b1e805badc991188169b40ad43342d6b6e08, 0x6432dd744e6827290ee61dc602a93d563bd2a278a,
    0x65db145ace68d4e09ff65dec6f4be87529012460c, 0x21cafd2b615206b51388be1095a1b47e6d0fee08, 0x4f612dd0205e33471c5d9caa99867afeeae8cf01e, 0x4905470da67aba3954c323dcea2c9bea5bbf58e,
    0x647fc413e930c0f0c8549e69b07f6e6990d9ba502, 0x6587cfc7de22fa8358aa5f7608e8d69692b7abc0c, 0x65cac2b0b67a5b6200269cc0d1446f09004642182, 0x2917ccd6884c2959e4c808a37d0bc37cf059c483c,
    0x295e9d9c2b072ba23f0a0bb96b289b1ee13f66cbc, 0x20865cf63cfdb712be3ca071405aa906e74afe2e, 0x4d211dc2fe5ab32304a4d5fb59dd4f8f0843d44b8, 0x3b96f1d0f7bfb376b61c8311c1cd4f54e512daae,
    0x28eb9a3a65dfe99774db0914cd3609e5e24c4519c, 0x1b4033073d89e1badb602e138e8f138b44001680, 0x3e5f1dc2eea5ef67383ca859c972123fcebc7e2e, 0x4f296c1cd0b1bb8973735fe56d3be509b8c0ec910,
    0x2ae6f30728ca1fe928fcc3c9bd05c8443caf13db2, 0x4d68589ed6b57dd4785b16f8831a3f3b8f98d4096, 0x65cbc237f25ec4916c04dc85b941539d00a11c484, 0x4cdc0ab937ff2a11d5c4542d7f9c96bb7fcffc2b0,
    0x2abb7950cf5be6389e368120b37aebb069ffc10b4, 0x3b86bab1b69ef1fa455087d936abd0d857dfaf20, 0x28a6d74168a3709d59a28a81ea353e2ed3308a2b4, 0x2b1efd53066eb58f4a3742da4283fe3743cb84a1a,
    0x662a3b8bfc6ee26042ae1692af062d4c676fe6f8a, 0x2aaabdfa2649498a1635401f4076a68d8c2a86e9a, 0x678ba37c9f81c381781a95eab2ea9098df95a5b82, 0x66672bf82b245a973e59153c80a95ce8b0b1d642a,
    0x4f2c70eefe6b968604b75f3f090d8e38085715b10, 0x28ff2468057a1c840cbdc8c9bad099703d8322092, 0x4d35c3dea3b64ddbceb81425490b44779edf2f936, 0x1fc92c15125e09ae280019cad2535b7ee2c80000,
    0x2ae6e716e3eecc03eef4c390dde507f0c2c3775b2, 0x2959c37ee694d087e2490b5967359e80ff405551c, 0x4cdd0b363248c16edc1554ecb5c842915af4dff90, 0x2957b9993f232751f0280bdc03b2b3a83f022c83c,
    0x4e8cb8c36ae9f3951ef6dd2c39bb1af2a89264038, 0x4ef6206e5c4e06a5cebd5eac1b5fc48e8bda73790, 0x6582c224b35e04430c97dda95d3c37da68d01dd24, 0x66d57bbd8c7d2312fcbfd6755e8e847257d231524,
    0x2af3299c79262baacb41067a3b69bbf5935631d1c, 0x38eb9a3a65dfe99774db0914dd3609e5f24c55092, 0x4ed57bbd8c7d2312fcbfd6755e8e847257d231518, 0x2cdd5f3fcc6da006c9ef1455c9005b00c429c639c,
    0x20d2d706578ae1b30ac9af6b7b8a0098b77b5c08, 0x4000010501d259b315fb2004c22459db9fc81c096, 0x4cdd5e3acdbff9b5dc1434510b2402db5be1da336,
)


def build_tables():
    """Lookup tables passed into the kernels (never globals, so the
    compilation cache stays valid)."""
    spread = np.zeros(256, np.uint64)
    for i in range(256):
        v = 0
        for j in range(8):
            v |= ((i >> j) & 1) << (2 * j)
        spread[i] = v
    ht = np.zeros((NBYTES, 256, W), np.uint64)
    for bidx in range(NBYTES):
        for bval in range(256):
            acc = 0
            for j in range(8):
                pos = 8 * bidx + j
                if (bval >> j) & 1 and pos < M:
                    acc ^= _HT_BITS[pos]
            for wd in range(W):
                ht[bidx, bval, wd] = (acc >> (64 * wd)) & 0xFFFFFFFFFFFFFFFF
    tab = np.zeros((16, W + 1), np.uint64)
    return tab, spread, ht


@njit(cache=True)
def _reduce(t0, t1, t2, t3, t4, t5):
    # fold words 5..3, then the bits >= 163 of word 2
    v = t5
    t5 = uint64(0)
    t2 ^= v << uint64(36)
    t3 ^= v >> uint64(28)
    t2 ^= v << uint64(35)
    t3 ^= v >> uint64(29)
    t2 ^= v << uint64(32)
    t3 ^= v >> uint64(32)
    t2 ^= v << uint64(29)
    t3 ^= v >> uint64(35)
    v = t4
    t4 = uint64(0)
    t1 ^= v << uint64(36)
    t2 ^= v >> uint64(28)
    t1 ^= v << uint64(35)
    t2 ^= v >> uint64(29)
    t1 ^= v << uint64(32)
    t2 ^= v >> uint64(32)
    t1 ^= v << uint64(29)
    t2 ^= v >> uint64(35)
    v = t3
    t3 = uint64(0)
    t0 ^= v << uint64(36)
    t1 ^= v >> uint64(28)
    t0 ^= v << uint64(35)
    t1 ^= v >> uint64(29)
    t0 ^= v << uint64(32)
    t1 ^= v >> uint64(32)
    t0 ^= v << uint64(29)
    t1 ^= v >> uint64(35)
    ex = t2 >> uint64(35)
    t2 &= uint64(0x7ffffffff)
    t0 ^= ex << uint64(7)
    t1 ^= ex >> uint64(57)
    t0 ^= ex << uint64(6)
    t1 ^= ex >> uint64(58)
    t0 ^= ex << uint64(3)
    t1 ^= ex >> uint64(61)
    t0 ^= ex
    return (t0, t1, t2)


@njit(cache=True)
def _mul(a, b, tab):
    # 4-bit windowed comb multiplication; tab is (16, W+1) scratch
    for j in range(W + 1):
        tab[0, j] = uint64(0)
    for j in range(W):
        tab[1, j] = b[j]
    tab[1, W] = uint64(0)
    for i in range(2, 16, 2):
        h = i >> 1
        c = uint64(0)
        for j in range(W + 1):
            v = tab[h, j]
            tab[i, j] = (v << uint64(1)) | c
            c = v >> uint64(63)
        for j in range(W):
            tab[i + 1, j] = tab[i, j] ^ b[j]
        tab[i + 1, W] = tab[i, W]
    t0 = uint64(0)
    t1 = uint64(0)
    t2 = uint64(0)
    t3 = uint64(0)
    t4 = uint64(0)
    t5 = uint64(0)
    for k in range(15, -1, -1):
        if k != 15:
            t5 = (t5 << uint64(4)) | (t4 >> uint64(60))
            t4 = (t4 << uint64(4)) | (t3 >> uint64(60))
            t3 = (t3 << uint64(4)) | (t2 >> uint64(60))
            t2 = (t2 << uint64(4)) | (t1 >> uint64(60))
            t1 = (t1 << uint64(4)) | (t0 >> uint64(60))
            t0 = t0 << uint64(4)
        sh = uint64(4 * k)
        nib = (a[0] >> sh) & uint64(0xF)
        t0 ^= tab[nib, 0]
        t1 ^= tab[nib, 1]
        t2 ^= tab[nib, 2]
        t3 ^= tab[nib, 3]
        nib = (a[1] >> sh) & uint64(0xF)
        t1 ^= tab[nib, 0]
        t2 ^= tab[nib, 1]
        t3 ^= tab[nib, 2]
        t4 ^= tab[nib, 3]
        nib = (a[2] >> sh) & uint64(0xF)
        t2 ^= tab[nib, 0]
        t3 ^= tab[nib, 1]
        t4 ^= tab[nib, 2]
        t5 ^= tab[nib, 3]
    return _reduce(t0, t1, t2, t3, t4, t5)


@njit(cache=True)
def _sqr(a, spread):
    # bit-spreading squaring via the 256-entry spread table
    v = a[0]
    t0 = (spread[(v >> uint64(0)) & uint64(0xFF)] << uint64(0)) | (spread[(v >> uint64(8)) & uint64(0xFF)] << uint64(16)) | (spread[(v >> uint64(16)) & uint64(0xFF)] << uint64(32)) | (spread[(v >> uint64(24)) & uint64(0xFF)] << uint64(48))
    t1 = (spread[(v >> uint64(32)) & uint64(0xFF)] << uint64(0)) | (spread[(v >> uint64(40)) & uint64(0xFF)] << uint64(16)) | (spread[(v >> uint64(48)) & uint64(0xFF)] << uint64(32)) | (spread[(v >> uint64(56)) & uint64(0xFF)] << uint64(48))
    v = a[1]
    t2 = (spread[(v >> uint64(0)) & uint64(0xFF)] << uint64(0)) | (spread[(v >> uint64(8)) & uint64(0xFF)] << uint64(16)) | (spread[(v >> uint64(16)) & uint64(0xFF)] << uint64(32)) | (spread[(v >> uint64(24)) & uint64(0xFF)] << uint64(48))
    t3 = (spread[(v >> uint64(32)) & uint64(0xFF)] << uint64(0)) | (spread[(v >> uint64(40)) & uint64(0xFF)] << uint64(16)) | (spread[(v >> uint64(48)) & uint64(0xFF)] << uint64(32)) | (spread[(v >> uint64(56)) & uint64(0xFF)] << uint64(48))
    v = a[2]
    t4 = (spread[(v >> uint64(0)) & uint64(0xFF)] << uint64(0)) | (spread[(v >> uint64(8)) & uint64(0xFF)] << uint64(16)) | (spread[(v >> uint64(16)) & uint64(0xFF)] << uint64(32)) | (spread[(v >> uint64(24)) & uint64(0xFF)] << uint64(48))
    t5 = (spread[(v >> uint64(32)) & uint64(0xFF)] << uint64(0)) | (spread[(v >> uint64(40)) & uint64(0xFF)] << uint64(16)) | (spread[(v >> uint64(48)) & uint64(0xFF)] << uint64(32)) | (spread[(v >> uint64(56)) & uint64(0xFF)] << uint64(48))
    return _reduce(t0, t1, t2, t3, t4, t5)


@njit(cache=True)
def _xor(a, b):
    return (a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2])


@njit(cache=True)
def _is_zero(a):
    return (a[0] | a[1] | a[2]) == uint64(0)


@njit(cache=True)
def _trace(a):
    v = (a[0] & uint64(0x1)) ^ (a[2] & uint64(0x20000000))
    v ^= v >> uint64(32)
    v ^= v >> uint64(16)
    v ^= v >> uint64(8)
    v ^= v >> uint64(4)
    v ^= v >> uint64(2)
    v ^= v >> uint64(1)
    return v & uint64(1)


@njit(cache=True)
def _halftrace(a, ht):
    # byte-sliced table lookup of the linear half-trace map
    r0 = uint64(0)
    r1 = uint64(0)
    r2 = uint64(0)
    for bidx in range(NBYTES):
        bval = (a[bidx >> 3] >> uint64(8 * (bidx & 7))) & uint64(0xFF)
        r0 ^= ht[bidx, bval, 0]
        r1 ^= ht[bidx, bval, 1]
        r2 ^= ht[bidx, bval, 2]
    return (r0, r1, r2)


@njit(cache=True)
def _inv(a, tab, spread):
    # Itoh-Tsujii chain [1, 2, 4, 5, 10, 20, 40, 80, 81, 162]
    x1 = a
    cur = a
    t = cur
    for _ in range(1):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    t = cur
    for _ in range(2):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    cur = _mul(_sqr(cur, spread), x1, tab)
    t = cur
    for _ in range(5):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    t = cur
    for _ in range(10):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    t = cur
    for _ in range(20):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    t = cur
    for _ in range(40):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    cur = _mul(_sqr(cur, spread), x1, tab)
    t = cur
    for _ in range(81):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    return _sqr(cur, spread)


@njit(cache=True)
def encode_batch(ws, xs, ls, kinds, cs, pref, tab, spread, ht):
    """Encode field elements ws (n, W) onto the curve.

    One inversion for the whole batch (Montgomery's trick runs
    inside the kernel).  kinds[i]: 0 ordinary, 1 the x-zero point.
    """
    n = ws.shape[0]
    a_c = (uint64(0x1), uint64(0x0), uint64(0x0))
    b_c = (uint64(0x1), uint64(0x0), uint64(0x0))
    run = (uint64(0x1), uint64(0x0), uint64(0x0))
    for i in range(n):
        w = (ws[i, 0], ws[i, 1], ws[i, 2])
        c = _xor(_xor(_sqr(w, spread), w), a_c)
        if _is_zero(c):
            kinds[i] = 1
        else:
            kinds[i] = 0
            run = _mul(run, c, tab)
        cs[i, 0] = c[0]
        cs[i, 1] = c[1]
        cs[i, 2] = c[2]
        pref[i, 0] = run[0]
        pref[i, 1] = run[1]
        pref[i, 2] = run[2]
    inv_run = _inv(run, tab, spread)
    for i in range(n - 1, -1, -1):
        if kinds[i] == 1:
            continue
        c = (cs[i, 0], cs[i, 1], cs[i, 2])
        prev = (uint64(0x1), uint64(0x0), uint64(0x0))
        for j in range(i - 1, -1, -1):
            if kinds[j] == 0:
                prev = (pref[j, 0], pref[j, 1], pref[j, 2])
                break
        c_inv = _mul(inv_run, prev, tab)
        inv_run = _mul(inv_run, c, tab)
        w = (ws[i, 0], ws[i, 1], ws[i, 2])
        done = False
        if not done:
            x = _mul((uint64(0xdb6db6db6db6db30), uint64(0x6db6db6db6db6db6), uint64(0x6db6db6db)), c, tab)
            x_inv = _mul((uint64(0x67), uint64(0x0), uint64(0x400000000)), c_inv, tab)
            h = _xor(_xor(_mul(_sqr(x_inv, spread), b_c, tab), x), a_c)
            if _trace(h) == uint64(0):
                lam = _xor(_halftrace(h, ht), x)
                lam0 = (lam[0] ^ (w[0] & uint64(1)), lam[1], lam[2],)
                xs[i, 0] = x[0]
                ls[i, 0] = lam0[0]
                xs[i, 1] = x[1]
                ls[i, 1] = lam0[1]
                xs[i, 2] = x[2]
                ls[i, 2] = lam0[2]
                done = True
        if not done:
            x = _mul((uint64(0xb6db6db6db6db6a8), uint64(0xdb6db6db6db6db6d), uint64(0x5b6db6db6)), c, tab)
            x_inv = _mul((uint64(0xffffffffffffffba), uint64(0xffffffffffffffff), uint64(0x7ffffffff)), c_inv, tab)
            h = _xor(_xor(_mul(_sqr(x_inv, spread), b_c, tab), x), a_c)
            if _trace(h) == uint64(0):
                lam = _xor(_halftrace(h, ht), x)
                lam0 = (lam[0] ^ (w[0] & uint64(1)), lam[1], lam[2],)
                xs[i, 0] = x[0]
                ls[i, 0] = lam0[0]
                xs[i, 1] = x[1]
                ls[i, 1] = lam0[1]
                xs[i, 2] = x[2]
                ls[i, 2] = lam0[2]
                done = True
        if not done:
            x = _mul((uint64(0x6db6db6db6db6d99), uint64(0xb6db6db6db6db6db), uint64(0x36db6db6d)), c, tab)
            x_inv = _mul((uint64(0xffffffffffffffdd), uint64(0xffffffffffffffff), uint64(0x3ffffffff)), c_inv, tab)
            h = _xor(_xor(_mul(_sqr(x_inv, spread), b_c, tab), x), a_c)
            if _trace(h) == uint64(0):
                lam = _xor(_halftrace(h, ht), x)
                lam0 = (lam[0] ^ (w[0] & uint64(1)), lam[1], lam[2],)
                xs[i, 0] = x[0]
                ls[i, 0] = lam0[0]
                xs[i, 1] = x[1]
                ls[i, 1] = lam0[1]
                xs[i, 2] = x[2]
                ls[i, 2] = lam0[2]
                done = True
        if not done:
            kinds[i] = 2  # unreachable for valid parameters


@njit(cache=True)
def accumulate(state, xs, ls, kinds, start, neg, tab, spread):
    """Mixed-add points [start:] into the ordinary accumulator.

    state holds (X, L, Z) as 3*W words.  Stops and returns i when
    element i needs the general path (special point kind, equal or
    opposite operands); returns n when the whole range is done.
    """
    n = xs.shape[0]
    X = (state[0], state[1], state[2])
    L = (state[3], state[4], state[5])
    Z = (state[6], state[7], state[8])
    i = start
    while i < n:
        if kinds[i] != 0:
            break
        x2 = (xs[i, 0], xs[i, 1], xs[i, 2])
        l2 = (ls[i, 0], ls[i, 1], ls[i, 2])
        if neg:
            l2 = (l2[0] ^ uint64(1), l2[1], l2[2],)
        U2 = _mul(x2, Z, tab)
        V2 = _mul(l2, Z, tab)
        B = _xor(X, U2)
        if _is_zero(B):
            break
        A = _xor(L, V2)
        ZB = _mul(Z, B, tab)
        Bsq = _sqr(B, spread)
        S = _xor(_xor(_mul(X, A, tab), _mul(V2, B, tab)), Bsq)
        D = _sqr(ZB, spread)
        SZB = _mul(S, ZB, tab)
        X3n = _xor(_xor(_sqr(S, spread), SZB), _mul(Bsq, ZB, tab))
        X3n = _xor(X3n, D)
        if _is_zero(X3n):
            break
        X3 = _sqr(X3n, spread)
        Z3 = _mul(D, X3n, tab)
        L3 = _xor(_xor(X3, _mul(_xor(D, SZB), X3n, tab)),
                  _mul(_mul(_mul(X, U2, tab), _xor(A, B), tab), _mul(B, D, tab), tab))
        X = X3
        L = L3
        Z = Z3
        i += 1
    state[0] = X[0]
    state[1] = X[1]
    state[2] = X[2]
    state[3] = L[0]
    state[4] = L[1]
    state[5] = L[2]
    state[6] = Z[0]
    state[7] = Z[1]
    state[8] = Z[2]
    return i
