"""Compiled kernels for sect233k1 over GF(2^233).

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

W = 4
M = 233
NBYTES = 30
CURVE = "sect233k1"

# half-trace of z^i (canonical root, coefficient 0 clear), i = 0..M-1
_HT_BITS = (
    0x0, 0x197fd7221055aabaef4e0dc109620b7fc13c12e8d69fd01d0208e170520, 0x197fd7221055aabaef4e0dc109620b7fc13c12e8d69fd01d0208e170522, 0x19395a41be5109128b2e08511169795725b450480715c8585d4da648bac,
    0x197fd7221055aabaef4e0dc109620b7fc13c12e8d69fd01d0208e170526, 0x10c2a9b2fea1a2bee86b884367238d2053841a240741902cf5e9217f50c, 0x19395a41be5109128b2e08511169795725b450480715c8585d4da648ba4, 0x338a8713c4254c7ae360522fc461a5035a3ac98c5d86126eac1c0a1166,
    0x197fd7221055aabaef4e0dc109620b7fc13c12e8d69fd01d0208e170536, 0x1725848920eb0518410ce9a5281a2bcc8424d24a625b619963440e20136, 0x10c2a9b2fea1a2bee86b884367238d2053841a240741902cf5e9217f52c, 0x10c68c348aa0a692c21421930c92e92898009218751f596806d30877774,
    0x19395a41be5109128b2e08511169795725b450480715c8585d4da648be4, 0x1d6f5179967760dee3df1dd38a2323ef75be3a7dcedacd2a1364347e212, 0x338a8713c4254c7ae360522fc461a5035a3ac98c5d86126eac1c0a11e6, 0x1825b64ffe5262772a288061b2a4c50dafb23c001541a04e7c6670cfd0c,
    0x197fd7221055aabaef4e0dc109620b7fc13c12e8d69fd01d0208e170436, 0x12b062f72ce4f6a4cb8300c3a3e2d9123cab8a440103946a716ea5479f0, 0x1725848920eb0518410ce9a5281a2bcc8424d24a625b619963440e20336, 0x34c83c8d4500e1e8839b1e46d334c6863b098156c4fa5c0b69829acc78,
    0x10c2a9b2fea1a2bee86b884367238d2053841a240741902cf5e9217f12c, 0x6dc7d31ca5f71249ce72f775abb82bbd63f49acf2acedfddf67383e042, 0x10c68c348aa0a692c21421930c92e92898009218751f596806d30877f74, 0xb0f162860942190624ac380c95a024d82185222546e0043c318d731516,
    0x19395a41be5109128b2e08511169795725b450480715c8585d4da649be4, 0xb0b160860941190624ac280c15a02458219522214660007c118bf31516, 0x1d6f5179967760dee3df1dd38a2323ef75be3a7dcedacd2a1364347c212, 0x1130e386a29ae073201ba7a15d85df5248123414e5ae351cdfdad5cb8ea,
    0x338a8713c4254c7ae360522fc461a5035a3ac98c5d86126eac1c0a51e6, 0xc9ab45864cbdc8c6ac5aaf74020f491b2a78a2c2736fdbcc0127156fd8, 0x1825b64ffe5262772a288061b2a4c50dafb23c001541a04e7c6670c7d0c, 0xfbb1a6e508104f346fba9d43bf4acd52b04b6b4660e88953a73ac92768,
    0x197fd7221055aabaef4e0dc109620b7fc13c12e8d69fd01d0208e160436, 0x1e13fbf06e376e0a4f906e377712e597729e82d2a3f528f8ed9d0d63e0c, 0x12b062f72ce4f6a4cb8300c3a3e2d9123cab8a440103946a716ea5679f0, 0x16cdb3cb211bd9a49184b028eca866b5915d252427911265623863754a,
    0x1725848920eb0518410ce9a5281a2bcc8424d24a625b619963440e60336, 0x165ad0efacfce93ce63cb721128d0fb32cba5a99e9b9754c4f3247dc02e, 0x34c83c8d4500e1e8839b1e46d334c6863b098156c4fa5c0b698292cc78, 0x123a6b0e0ecc1fb0822a02c180ab511248a9d0000073841b1d17336d8c4,
    0x10c2a9b2fea1a2bee86b884367238d2053841a240741902cf5e9207f12c, 0xe85f8de429783a080144bb6e9c8ae8f3a1c401a476b7ca6960fd60266a, 0x6dc7d31ca5f71249ce72f775abb82bbd63f49acf2acedfddf673a3e042, 0xb3181963a8ba9e305e3abf298ae2c54590464e4676bb866de5633a023c,
    0x10c68c348aa0a692c21421930c92e92898009218751f596806d30c77f74, 0x1e47516c9c36201e697fc3f58ee323af69981a7e402aec8803e6f57d346, 0xb0f162860942190624ac380c95a024d82185222546e0043c318df31516, 0x826248024d410040135a1512a31240880b9085c6458c91472303959758,
    0x19395a41be5109128b2e08511169795725b450480715c8585d4db649be4, 0x13ba26a572e0a0462e535277f3a32f508f2028b71830bd8af82a616836a, 0xb0b160860941190624ac280c15a02458219522214660007c1189f31516, 0x16c0e09236d52265c3d20dc75a2743a211bc2e70c28f807cdf6035e8c12,
    0x1d6f5179967760dee3df1dd38a2323ef75be3a7dcedacd2a1364747c212, 0x1c279c8516779cb29e68e72cbe49718d8dbd91a2f1e875d76ea1874cb84, 0x1130e386a29ae073201ba7a15d85df5248123414e5ae351cdfda55cb8ea, 0x69b4970e05849430341e5c6bd4f189672326466e4db89f36addc2a90a0,
    0x338a8713c4254c7ae360522fc461a5035a3ac98c5d86126eac0c0a51e6, 0x578ec33383052f1ea0f8516f95536f29513360cd18c69b3fb1dd99c69e, 0xc9ab45864cbdc8c6ac5aaf74020f491b2a78a2c2736fdbcc0107156fd8, 0xf0fe1c6acb758ba8b8c6b7439f06ece689f104a676d69907a1ead04a2e,
    0x1825b64ffe5262772a288061b2a4c50dafb23c001541a04e7c6270c7d0c, 0x10c68c348aa0a692c21c21930c92a92898009218751d596806d30877774, 0xfbb1a6e508104f346fba9d43bf4acd52b04b6b4660e88953a7bac92768, 0xe4ddde14cb8de55c8caf4e0912180afe693be23bddfb5571d19200a150,
    0x197fd7221055aabaef4e0dc109620b7fc13c12e8d69fd01d0218e160436, 0x1c39bcaf3a7a703860e8e0a5a19313958d3312223426258b744b5c6d5c2, 0x1e13fbf06e376e0a4f906e377712e597729e82d2a3f528f8edbd0d63e0c, 0x981724fb4ed44aa4184e85097b26a472dae824a22d0c85748aa2924b26,
    0x12b062f72ce4f6a4cb8300c3a3e2d9123cab8a440103946a712ea5679f0, 0x3b631699068ab90af4e65c00c6a4c59652050eae7ced41002d0f325d68, 0x16cdb3cb211bd9a49184b028eca866b5915d2524279112656a3863754a, 0x121cd9aff4da59e1cd35a2a5029cc51b4fb366dc2823658951270ad6c58,
    0x1725848920eb0518410ce9a5281a2bcc8424d24a625b619962440e60336, 0x1786534e22d87ff3875de0c5f1add3cb6833f4fe0043c08bfd5e62cec82, 0x165ad0efacfce93ce63cb721128d0fb32cba5a99e9b9754c4d3247dc02e, 0x11f867ddbab6a8c945e3c3f3dda66972fd1826e6543abc6bde8e21f5a74,
    0x34c83c8d4500e1e8839b1e46d334c6863b098156c4fa5c0b298292cc78, 0x1636bb8712e651a800a26325289913994d2b4002607821c827530b4c182, 0x123a6b0e0ecc1fb0822a02c180ab511248a9d0000073841b1517336d8c4, 0x1572982bf0bd0bf9a4bd49c53d6ccff1071c749e470fc48c7b99a2d687e,
    0x10c2a9b2fea1a2bee86b884367238d2053841a240741902ce5e9207f12c, 0x1b1d1e3ec21036b0841e85434ee2cf5d9a119098d098c16896a3b066c6a, 0xe85f8de429783a080144bb6e9c8ae8f3a1c401a476b7ca6b60fd60266a, 0x1e6f7b35b62ea886092103f78ce1a9af5d880844407ab9ab47d7b14e324,
    0x6dc7d31ca5f71249ce72f775abb82bbd63f49acf2acedfd9f673a3e042, 0x8000000000000000000000000000000000000000, 0xb3181963a8ba9e305e3abf298ae2c54590464e4676bb8665e5633a023c, 0x16ac624eeacc2cfbc9eb600533948f8a2a28b6662000049c7d6a5dc702a,
    0x10c68c348aa0a692c21421930c92e92898009218751f596906d30c77f74, 0x179eac21aed366846cd329b5895169d884b68ab4734b28db461ddc5da64, 0x1e47516c9c36201e697fc3f58ee323af69981a7e402aec8a03e6f57d346, 0x166c5bcaeeeb8d20c564afa5fb5b5fab62a4c2e8e3af719fff299a799ba,
    0xb0f162860942190624ac380c95a024d82185222546e0047c318df31516, 0xd015e2998e8d04b40f34504fc16ccc785232636d1981097ab8109a6d28, 0x826248024d410040135a1512a31240880b9085c6458c91c72303959758, 0x1f7b967ada25826184e789c73f6605f5b30c24ac531fd1bd3ea8e4e501c,
    0x19395a41be5109128b2e08511169795725b450480715c8485d4db649be4, 0x1270c10a70c18b2a8d04ce41c0280932432440ca82e1d05ec1003651120, 0x13ba26a572e0a0462e535277f3a32f508f2028b71830bdaaf82a616836a, 0x1ab5dbf1a0275dcb2007cef3542f311f740fe40e82e6e86dc98173f8680,
    0xb0b160860941190624ac280c15a02458219522214660047c1189f31516, 0xd095f2998e0904b40f34704fc56ccc7c5212636d1a81097ab9189a6d28, 0x16c0e09236d52265c3d20dc75a2743a211bc2e70c28f80fcdf6035e8c12, 0x18b2020c7c71d982c5c62c80d65a4b100bb742e8b2d65446d8b08b30966,
    0x1d6f5179967760dee3df1dd38a2323ef75be3a7dcedacc2a1364747c212, 0x11a8e19e3eb66af9096bc7e34de64942599a3466c5bba06dd7cea1f1964, 0x1c279c8516779cb29e68e72cbe49718d8dbd91a2f1e877d76ea1874cb84, 0x69a4978e05849434341e5c6bd4f589272326666e4db81e36addc2a98a0,
    0x1130e386a29ae073201ba7a15d85df5248123414e5ae311cdfda55cb8ea, 0x8eda97306fcf930089ca3521d78ec2c74bb50186029d9711e89af13e6c, 0x69b4970e05849430341e5c6bd4f189672326466e4db81f36addc2a90a0, 0x1652fcb0faf5241485eb1df35a75ebb3933c98e5db9bac38da31bcdeb62,
    0x338a8713c4254c7ae360522fc461a5035a3ac98c5d87126eac0c0a51e6, 0x8a09f92228e91449a902023349880074025a44007010716c39960a134, 0x578ec33383052f1ea0f8516f95536f29513360cd18c49b3fb1dd99c69e, 0x1692f5d0a2d3b4c9aee209774a642193f035a4a0530dbcbdc624b1d4714,
    0xc9ab45864cbdc8c6ac5aaf74020f491b2a78a2c2736bdbcc0107156fd8, 0x887b0ffaae30273aaadce32d4c4600d3c24340e82a56c76dc86c085f54, 0xf0fe1c6acb758ba8b8c6b7439f06ece689f104a676de9907a1ead04a2e, 0x5b031990e1ca9474cd6c1865a4f4ad154986eba404e54a08e7083a9d72,
    0x1825b64ffe5262772a288061b2a4c50dafb23c001540a04e7c6270c7d0c, 0x94affbc96c5ad9e482dea52a4fba263d9acda0e2221d8322493bf6e212, 0x10c68c348aa0a692c21c21930c92a92898009218751f596806d30877774, 0xbc333377cbb4c252a347dd6b9b72c655f968c1beedac9b66e0e69b9238,
    0xfbb1a6e508104f346fba9d43bf4acd52b04b6b4660a88953a7bac92768, 0x4dc393dc20f7b840ee7af6658bb86b95e0f48ace2ace5f58e473f3e04a, 0xe4ddde14cb8de55c8caf4e0912180afe693be23bdd7b5571d19200a150, 0x19a7eb4b107af3451800a6b065d5874e65336d00a1b33c40e1cfdcdb05e,
    0x197fd7221055aabaef4e0dc109620b7fc13c12e8d68fd01d0218e160436, 0x11becdf9c0b34c5b424d0c739555335af616b62c9680e86a0899ccc9396, 0x1c39bcaf3a7a703860e8e0a5a19313958d3312223406258b744b5c6d5c2, 0x1428b65418ba050eaf03867796fabf81b910c8c495e0a9fa18a2fa666be,
    0x1e13fbf06e376e0a4f906e377712e597729e82d2a3b528f8edbd0d63e0c, 0x1889b2888e6f27490cd18bf1c85dbd0500ace4b4472ea91b8740cfca6ac, 0x981724fb4ed44aa4184e85097b26a472dae824a2250c85748aa2924b26, 0x82c5f5609cd2863d7aad240f8e400bf86c27c3222d9749503fb02b4c,
    0x12b062f72ce4f6a4cb8300c3a3e2d9123cab8a440003946a712ea5679f0, 0x18170d0ee04437692ef642c183ac8f1cca29e4ba1466c01b502b67d617e, 0x3b631699068ab90af4e65c00c6a4c59652050eae5ced41002d0f325d68, 0x1bf760f5922a895925a9027354ac697e3d0074c40064b8288d9676d4e34,
    0x16cdb3cb211bd9a49184b028eca866b5915d2524679112656a3863754a, 0x187915920e5bec6304672fa34a140335d0b6a4acf6ea743c962408d1152, 0x121cd9aff4da59e1cd35a2a5029cc51b4fb366dc2023658951270ad6c58, 0x58077ce060d6ff786684194db9cf6c3e88efca2505b49978f6e5b97bda,
    0x1725848920eb0518410ce9a5281a2bcc8424d24a725b619962440e60336, 0x11505a67208a57ff450c03416faf89732c03fec8446cc049e3bf23fa020, 0x1786534e22d87ff3875de0c5f1add3cb6833f4fe2043c08bfd5e62cec82, 0x10cea06bdca96bbaa1cb8bc14c6a4d2827865064473f801c93d0f375c38,
    0x165ad0efacfce93ce63cb721128d0fb32cba5a99a9b9754c4d3247dc02e, 0x7cedc5aa850f9614541e0d6f53f7aebb03366e634429da3f9dd2ab9bf6, 0x11f867ddbab6a8c945e3c3f3dda66972fd1826e6d43abc6bde8e21f5a74, 0x63646a79665c46729262c54d7f6ba9a8daeac48b7959d878dbea8b26b2,
    0x34c83c8d4500e1e8839b1e46d334c6863b098146c4fa5c0b298292cc78, 0x748f325fe71144926964b04bdc79ee34fb5a49a477c40976e8e91bb0ba, 0x1636bb8712e651a800a26325289913994d2b4000607821c827530b4c182, 0x1000fd20848395cf2984cf71ff6fa903c085ec4ad7edbc4faaeda3fe730,
    0x123a6b0e0ecc1fb0822a02c180ab511248a9d0040073841b1517336d8c4, 0xb1de31e4693a37fad984a32b18d665e5a947cd207757d273c4e1398b5a, 0x1572982bf0bd0bf9a4bd49c53d6ccff1071c7496470fc48c7b99a2d687e, 0x5e0f64adf1c497ac86fe556e12e20e3a3da722ef189c8e6b51826b4344,
    0x10c2a9b2fea1a2bee86b884367238d2053841a340741902ce5e9207f12c, 0x66ecbfc146d8e452190e84654b702aa79acac52274194b098837db8106, 0x1b1d1e3ec21036b0841e85434ee2cf5d9a1190b8d098c16896a3b066c6a, 0x11f067ddbabee8c14d63c1f3dde66b72fd1a26e6540abc6bde9ea1e5b62,
    0xe85f8de429783a080144bb6e9c8ae8f3a1c405a476b7ca6b60fd60266a, 0xd7145f42cfbbb90413a2ae6b5b990f6f8b552503337b0f7698a2a1f5d0, 0x1e6f7b35b62ea886092103f78ce1a9af5d8808c4407ab9ab47d7b14e324, 0x1cf139f42256388a0d1084f721f0a7b5783900d08592acfc751fa84364a,
    0x6dc7d31ca5f71249ce72f775abb82bbd63f48acf2acedfd9f673a3e042, 0x11fe6ea498b201c105f3c271d6aeab7a891064f61474ad1b88a732e7676, 0x8000000000000000002000000000000000000000, 0x1f0184fe5c3a30bace3ee4a7759199c4bb91129ab1d660a9a88a1c4e4f0,
    0xb3181963a8ba9e305e3abf298ae2c54590460e4676bb8665e5633a023c, 0x4daa0c41609f54d2d26cd04d8ce98b02987eccac29c51c68e56c2b65a4, 0x16ac624eeacc2cfbc9eb600533948f8a2a28be662000049c7d6a5dc702a, 0x11f866ddbab6a8c145e3c3f3dda66b72bd1826e6543abc6bde8e21e5b62,
    0x10c68c348aa0a692c21421930c92e92898008218751f596906d30c77f74, 0x1e6e7f3db62ea8a6492103f78ce1c9abdd880a44407ab9bb47d7b10e924, 0x179eac21aed366846cd329b5895169d884b6aab4734b28db461ddc5da64, 0x568f3aa6046b382c9805929b48e238d08a5090d1cf0d765f699316f12,
    0x1e47516c9c36201e697fc3f58ee323af69985a7e402aec8a03e6f57d346, 0x69a4978e05849430349e5c6bd4f589272326466e4db81e36addc2a98a0, 0x166c5bcaeeeb8d20c564afa5fb5b5fab62a442e8e3af719fff299a799ba, 0x17ec2d8d5ac6c98a46a247f568e975e8cf2a4282d1ffb9d8b603b35da9c,
    0xb0f162860942190624ac380c95a024d82195222546e0047c318df31516, 0x1d637d26c07e8df68008b601c2dbc7e7ca38f801bcf0145e84678f7e95e, 0xd015e2998e8d04b40f34504fc16ccc785212636d1981097ab8109a6d28, 0x450a93d34211c5b648fcf06eb8710b05d85b68ec2ec41b7e26f54bc490,
    0x826248024d410040135a1512a31240880bd085c6458c91c72303959758, 0x3e979e481f98366709697279f0ae19da1d1ac6730db821bb4eec1373e, 0x1f7b967ada25826184e789c73f6605f5b30424ac531fd1bd3ea8e4e501c, 0x197fd6221055aabaef4e0dc109620b7f813c12e8d69fd01d0208e160436,
    0x19395a41be5109128b2e08511169795725a450480715c8485d4db649be4, 0x1576bdad84bc0fc58ec2e01556dda3f9cc98eca235510dc988a38fde206, 0x1270c10a70c18b2a8d04ce41c0280932430440ca82e1d05ec1003651120, 0x1724808120eb0518010ce9a5281a6bc80424d04a625b618963440e60b36,
    0x13ba26a572e0a0462e535277f3a32f508f6028b71830bdaaf82a616836a, 0x1c5d9f16d2682ae146e7546330e645bddb2026af9d91e16d2813b5e485c, 0x1ab5dbf1a0275dcb2007cef3542f311f748fe40e82e6e86dc98173f8680, 0x48ab607640b103c227faaf4c3f364818e85183c3363e883d12eac28f58,
    0xb0b160860941190624ac280c15a02458319522214660047c1189f31516, 0x7e0ba278c4cd25b717f6545eb36a4e10cab377ee199d0cae22929a6318, 0xd095f2998e0904b40f34704fc56ccc7c7212636d1a81097ab9189a6d28, 0x1724848120eb07184104e9b5281a6bc88424d24a725b698962440e60b36,
    0x16c0e09236d52265c3d20dc75a2743a215bc2e70c28f80fcdf6035e8c12, 0x244ed9ef6518c2e6a6729d26da1e02adbb48a2c764fd865e78b601ff04, 0x18b2020c7c71d982c5c62c80d65a4b1003b742e8b2d65446d8b08b30966, 0xf659f05d4a9e6c34a73cc04a0b4c8edcf86a63696d110c331437c97c30,
    0x1d6f5179967760dee3df1dd38a2323ef65be3a7dcedacc2a1364747c212, 0xb073a77369dfcb8019d695289a2e64d3d9f905e664cd933561b2433e5a, 0x11a8e19e3eb66af9096bc7e34de64942799a3466c5bba06dd7cea1f1964, 0x5747028203a9a9faefef4c0417748fb00111cbba896d445d44ce8a8820,
    0x1c279c8516779cb29e68e72cbe49718dcdbd91a2f1e877d76ea1874cb84, 0x16f63edc0ac21912655a4777a8baa5b9b82152f2d1fca8bf26177f7231c, 0x69a4978e05849434341e5c6bd4f5892f2326666e4db81e36addc2a98a0, 0x1c29bcaf3a7a703860e8e0a5a19313858d3312223406358b744b5c6d5c2,
    0x1130e386a29ae073201ba7a15d85df5348123414e5ae311cdfda55cb8ea, 0xda6534e22d87ff3875de0c5f1add2cb6833f4fe3403808bfd5e62cec82, 0x8eda97306fcf930089ca3521d78ec2e74bb50186029d9711e89af13e6c, 0x116ecdf96897cfc922056a33165f276af61ee40e3761786858f1cfe971e,
    0x69b4970e05849430341e5c6bd4f189272326466e4db81f36addc2a90a0, 0xfb536110688e9db252c0206730c48dd948274c8142051a1ad781790c24, 0x1652fcb0faf5241485eb1df35a75ebbb933c98e5db9bac38da31bcdeb62, 0x1eb10a78b80d53dbaa0fed17fc5d7194310f740ee2dd4dbefbd5cbd9fc0,
    0x338a8713c4254c7ae360522fc461a4035a3ac98c5d87126eac0c0a51e6, 0x1f0f1ce62824cd75a2082405c69fc3cda80afc00b08055cfd0f31efbd56, 0x8a09f92228e91449a902023349882074025a44007010716c39960a134, 0x123e4e887aed1b8ca854ab11eb1a3d1a832d4838722d4d5ee62d1e652bc,
    0x578ec33383052f1ea0f8516f95536b29513360cd18c49b3fb1dd99c69e, 0x2703c2af4021ee5a48001303f47a0318381ac80550c6c116bed95af610, 0x1692f5d0a2d3b4c9aee209774a642113f035a4a0530dbcbdc624b1d4714, 0x1c39639f66f8a667ac94a39799970d965eb0ac98652e1cae5f0a1df806c,
    0xc9ab45864cbdc8c6ac5aaf74020f591b2a78a2c2736bdbcc0107156fd8,
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
def _reduce(t0, t1, t2, t3, t4, t5, t6, t7):
    # fold words 7..4, then the bits >= 233 of word 3
    v = t7
    t7 = uint64(0)
    t4 ^= v << uint64(33)
    t5 ^= v >> uint64(31)
    t3 ^= v << uint64(23)
    t4 ^= v >> uint64(41)
    v = t6
    t6 = uint64(0)
    t3 ^= v << uint64(33)
    t4 ^= v >> uint64(31)
    t2 ^= v << uint64(23)
    t3 ^= v >> uint64(41)
    v = t5
    t5 = uint64(0)
    t2 ^= v << uint64(33)
    t3 ^= v >> uint64(31)
    t1 ^= v << uint64(23)
    t2 ^= v >> uint64(41)
    v = t4
    t4 = uint64(0)
    t1 ^= v << uint64(33)
    t2 ^= v >> uint64(31)
    t0 ^= v << uint64(23)
    t1 ^= v >> uint64(41)
    ex = t3 >> uint64(41)
    t3 &= uint64(0x1ffffffffff)
    t1 ^= ex << uint64(10)
    t2 ^= ex >> uint64(54)
    t0 ^= ex
    return (t0, t1, t2, t3)


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
    t6 = uint64(0)
    t7 = uint64(0)
    for k in range(15, -1, -1):
        if k != 15:
            t7 = (t7 << uint64(4)) | (t6 >> uint64(60))
            t6 = (t6 << uint64(4)) | (t5 >> uint64(60))
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
        t4 ^= tab[nib, 4]
        nib = (a[1] >> sh) & uint64(0xF)
        t1 ^= tab[nib, 0]
        t2 ^= tab[nib, 1]
        t3 ^= tab[nib, 2]
        t4 ^= tab[nib, 3]
        t5 ^= tab[nib, 4]
        nib = (a[2] >> sh) & uint64(0xF)
        t2 ^= tab[nib, 0]
        t3 ^= tab[nib, 1]
        t4 ^= tab[nib, 2]
        t5 ^= tab[nib, 3]
        t6 ^= tab[nib, 4]
        nib = (a[3] >> sh) & uint64(0xF)
        t3 ^= tab[nib, 0]
        t4 ^= tab[nib, 1]
        t5 ^= tab[nib, 2]
        t6 ^= tab[nib, 3]
        t7 ^= tab[nib, 4]
    return _reduce(t0, t1, t2, t3, t4, t5, t6, t7)


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
    v = a[3]
    t6 = (spread[(v >> uint64(0)) & uint64(0xFF)] << uint64(0)) | (spread[(v >> uint64(8)) & uint64(0xFF)] << uint64(16)) | (spread[(v >> uint64(16)) & uint64(0xFF)] << uint64(32)) | (spread[(v >> uint64(24)) & uint64(0xFF)] << uint64(48))
    t7 = (spread[(v >> uint64(32)) & uint64(0xFF)] << uint64(0)) | (spread[(v >> uint64(40)) & uint64(0xFF)] << uint64(16)) | (spread[(v >> uint64(48)) & uint64(0xFF)] << uint64(32)) | (spread[(v >> uint64(56)) & uint64(0xFF)] << uint64(48))
    return _reduce(t0, t1, t2, t3, t4, t5, t6, t7)


@njit(cache=True)
def _xor(a, b):
    return (a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2], a[3] ^ b[3])


@njit(cache=True)
def _is_zero(a):
    return (a[0] | a[1] | a[2] | a[3]) == uint64(0)


@njit(cache=True)
def _trace(a):
    v = (a[0] & uint64(0x1)) ^ (a[2] & uint64(0x80000000))
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
    r3 = uint64(0)
    for bidx in range(NBYTES):
        bval = (a[bidx >> 3] >> uint64(8 * (bidx & 7))) & uint64(0xFF)
        r0 ^= ht[bidx, bval, 0]
        r1 ^= ht[bidx, bval, 1]
        r2 ^= ht[bidx, bval, 2]
        r3 ^= ht[bidx, bval, 3]
    return (r0, r1, r2, r3)


@njit(cache=True)
def _inv(a, tab, spread):
    # Itoh-Tsujii chain [1, 2, 3, 6, 7, 14, 28, 29, 58, 116, 232]
    x1 = a
    cur = a
    t = cur
    for _ in range(1):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    cur = _mul(_sqr(cur, spread), x1, tab)
    t = cur
    for _ in range(3):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    cur = _mul(_sqr(cur, spread), x1, tab)
    t = cur
    for _ in range(7):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    t = cur
    for _ in range(14):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    cur = _mul(_sqr(cur, spread), x1, tab)
    t = cur
    for _ in range(29):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    t = cur
    for _ in range(58):
        t = _sqr(t, spread)
    cur = _mul(t, cur, tab)
    t = cur
    for _ in range(116):
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
    a_c = (uint64(0x0), uint64(0x0), uint64(0x0), uint64(0x0))
    b_c = (uint64(0x1), uint64(0x0), uint64(0x0), uint64(0x0))
    run = (uint64(0x1), uint64(0x0), uint64(0x0), uint64(0x0))
    for i in range(n):
        w = (ws[i, 0], ws[i, 1], ws[i, 2], ws[i, 3])
        c = _xor(_xor(_sqr(w, spread), w), a_c)
        if _is_zero(c):
            kinds[i] = 1
        else:
            kinds[i] = 0
            run = _mul(run, c, tab)
        cs[i, 0] = c[0]
        cs[i, 1] = c[1]
        cs[i, 2] = c[2]
        cs[i, 3] = c[3]
        pref[i, 0] = run[0]
        pref[i, 1] = run[1]
        pref[i, 2] = run[2]
        pref[i, 3] = run[3]
    inv_run = _inv(run, tab, spread)
    for i in range(n - 1, -1, -1):
        if kinds[i] == 1:
            continue
        c = (cs[i, 0], cs[i, 1], cs[i, 2], cs[i, 3])
        prev = (uint64(0x1), uint64(0x0), uint64(0x0), uint64(0x0))
        for j in range(i - 1, -1, -1):
            if kinds[j] == 0:
                prev = (pref[j, 0], pref[j, 1], pref[j, 2], pref[j, 3])
                break
        c_inv = _mul(inv_run, prev, tab)
        inv_run = _mul(inv_run, c, tab)
        w = (ws[i, 0], ws[i, 1], ws[i, 2], ws[i, 3])
        done = False
        if not done:
            x = _mul((uint64(0x0), uint64(0xdb6db6db6db6d800), uint64(0x6db6db6db6db6db6), uint64(0x1b6db6db6db)), c, tab)
            x_inv = _mul((uint64(0x3), uint64(0x200), uint64(0x0), uint64(0x10000000000)), c_inv, tab)
            h = _xor(_xor(_mul(_sqr(x_inv, spread), b_c, tab), x), a_c)
            if _trace(h) == uint64(0):
                lam = _xor(_halftrace(h, ht), x)
                lam0 = (lam[0] ^ (w[0] & uint64(1)), lam[1], lam[2], lam[3],)
                xs[i, 0] = x[0]
                ls[i, 0] = lam0[0]
                xs[i, 1] = x[1]
                ls[i, 1] = lam0[1]
                xs[i, 2] = x[2]
                ls[i, 2] = lam0[2]
                xs[i, 3] = x[3]
                ls[i, 3] = lam0[3]
                done = True
        if not done:
            x = _mul((uint64(0x0), uint64(0xb6db6db6db6db400), uint64(0xdb6db6db6db6db6d), uint64(0x16db6db6db6)), c, tab)
            x_inv = _mul((uint64(0x2), uint64(0xfffffffffffffc00), uint64(0xffffffffffffffff), uint64(0x1ffffffffff)), c_inv, tab)
            h = _xor(_xor(_mul(_sqr(x_inv, spread), b_c, tab), x), a_c)
            if _trace(h) == uint64(0):
                lam = _xor(_halftrace(h, ht), x)
                lam0 = (lam[0] ^ (w[0] & uint64(1)), lam[1], lam[2], lam[3],)
                xs[i, 0] = x[0]
                ls[i, 0] = lam0[0]
                xs[i, 1] = x[1]
                ls[i, 1] = lam0[1]
                xs[i, 2] = x[2]
                ls[i, 2] = lam0[2]
                xs[i, 3] = x[3]
                ls[i, 3] = lam0[3]
                done = True
        if not done:
            x = _mul((uint64(0x1), uint64(0x6db6db6db6db6c00), uint64(0xb6db6db6db6db6db), uint64(0xdb6db6db6d)), c, tab)
            x_inv = _mul((uint64(0x1), uint64(0xfffffffffffffe00), uint64(0xffffffffffffffff), uint64(0xffffffffff)), c_inv, tab)
            h = _xor(_xor(_mul(_sqr(x_inv, spread), b_c, tab), x), a_c)
            if _trace(h) == uint64(0):
                lam = _xor(_halftrace(h, ht), x)
                lam0 = (lam[0] ^ (w[0] & uint64(1)), lam[1], lam[2], lam[3],)
                xs[i, 0] = x[0]
                ls[i, 0] = lam0[0]
                xs[i, 1] = x[1]
                ls[i, 1] = lam0[1]
                xs[i, 2] = x[2]
                ls[i, 2] = lam0[2]
                xs[i, 3] = x[3]
                ls[i, 3] = lam0[3]
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
    X = (state[0], state[1], state[2], state[3])
    L = (state[4], state[5], state[6], state[7])
    Z = (state[8], state[9], state[10], state[11])
    i = start
    while i < n:
        if kinds[i] != 0:
            break
        x2 = (xs[i, 0], xs[i, 1], xs[i, 2], xs[i, 3])
        l2 = (ls[i, 0], ls[i, 1], ls[i, 2], ls[i, 3])
        if neg:
            l2 = (l2[0] ^ uint64(1), l2[1], l2[2], l2[3],)
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
    state[3] = X[3]
    state[4] = L[0]
    state[5] = L[1]
    state[6] = L[2]
    state[7] = L[3]
    state[8] = Z[0]
    state[9] = Z[1]
    state[10] = Z[2]
    state[11] = Z[3]
    return i
