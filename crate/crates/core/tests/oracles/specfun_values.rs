// Generated by gen_specfun.py (mpmath, 60 digits).

pub const LOG_GAMMA: &[(f64, f64)] = &[
    (1e-08, 18.42068073818021),
    (2.5e-08, 17.50438999764782),
    (6.000000000000001e-08, 16.628921240091373),
    (1e-07, 16.118095593236763),
    (2.5e-07, 15.2018047747803),
    (6e-07, 14.326335835401162),
    (1e-06, 13.815509980749432),
    (2.4999999999999998e-06, 12.899218383056096),
    (6e-06, 12.023747625471838),
    (1e-05, 11.512919692895826),
    (2.5e-05, 10.596620303218486),
    (6.000000000000001e-05, 9.721131365763075),
    (0.0001, 9.210282658633963),
    (0.00025, 8.293905387583733),
    (0.0006000000000000001, 7.418234869350806),
    (0.001, 6.907178885383853),
    (0.0025, 5.990026642114524),
    (0.006, 5.112562038378847),
    (0.01, 4.599479878042022),
    (0.025, 3.674956947385165),
    (0.06, 2.7816554630811448),
    (0.1, 2.252712651734206),
    (0.25, 1.2880225246980774),
    (0.5, 0.5723649429247001),
    (0.6000000000000001, 0.3982338580692348),
    (0.999, 0.0005780385328913802),
    (1.0, 0.0),
    (1.0001, -5.771334222047127e-05),
    (1.3, -0.10817480950786047),
    (1.45, -0.12142059074030692),
    (1.4616, -0.12148629003589732),
    (1.47, -0.121452498007656),
    (1.6, -0.11259176569675577),
    (1.999, -0.0004224618006921073),
    (2.0001, 4.2281658112919945e-05),
    (2.5, 0.2846828704729192),
    (3.7, 1.428072326665388),
    (6.0, 4.787491742782046),
    (7.25, 7.0521854507385395),
    (9.99, 12.779315214350193),
    (10.0, 12.801827480081469),
    (10.01, 12.824350262448247),
    (10.5, 13.940625219403763),
    (25.0, 54.78472939811232),
    (60.0, 184.53382886144948),
    (100.0, 359.1342053695754),
    (250.0, 1128.5237708729908),
    (600.0, 3235.8784057241605),
    (1000.0, 5905.220423209181),
    (2500.0, 17057.12197600184),
    (6000.0, 46193.65768430914),
    (10000.0, 82099.71749644238),
    (25000.0, 228161.63322257306),
    (60000.0, 600121.4083622558),
    (100000.0, 1051287.7089736569),
    (250000.0, 2857298.753541864),
    (600000.0, 7382805.227115175),
    (1000000.0, 12815504.569147611),
    (2500000.0, 34329496.777633995),
    (6000000.0, 87643613.27845751),
    (10000000.0, 151180949.3694739),
    (25000000.0, 400859651.9725572),
    (60000000.0, 1014591299.1751934),
    (100000000.0, 1742068066.1038346),
];
pub const DIGAMMA: &[(f64, f64)] = &[
    (1e-08, -100000000.57721564),
    (2.5e-08, -40000000.57721563),
    (6.000000000000001e-08, -16666667.243882231),
    (1e-07, -10000000.5772155),
    (2.5e-07, -4000000.577215254),
    (6e-07, -1666667.2438813448),
    (1e-06, -1000000.5772140201),
    (2.4999999999999998e-06, -400000.5772115526),
    (6e-06, -166667.24387246202),
    (1e-05, -100000.57719921567),
    (2.5e-05, -40000.5771745423),
    (6.000000000000001e-05, -16667.24378363985),
    (0.0001, -10000.577051183514),
    (0.00025, -4000.5768045064965),
    (0.0006000000000000001, -1667.2428958036348),
    (0.001, -1000.5755719318103),
    (0.0025, -400.57311082571914),
    (0.006, -167.2340557687698),
    (0.01, -100.56088545786868),
    (0.025, -40.536827082849385),
    (0.06, -17.14929260248149),
    (0.1, -10.423754940411076),
    (0.25, -4.2274535333762655),
    (0.5, -1.9635100260214235),
    (0.6000000000000001, -1.54061921389319),
    (0.999, -0.5788618021086455),
    (1.0, -0.5772156649015329),
    (1.0001, -0.5770511835143348),
    (1.3, -0.16919088886679962),
    (1.45, -0.011316422586445888),
    (1.4616, -3.110625123034165e-05),
    (1.47, 0.008066489011364869),
    (1.6, 0.12604745277347632),
    (1.999, 0.4221391988923556),
    (2.0001, 0.4228488264846654),
    (2.5, 0.7031566406452432),
    (3.7, 1.1671535393615113),
    (6.0, 1.7061176684318005),
    (7.25, 1.910453526883736),
    (9.99, 2.250700372831201),
    (10.0, 2.251752589066721),
    (10.01, 2.2528037003181356),
    (10.5, 2.3030010342976865),
    (25.0, 3.198742512851974),
    (60.0, 4.0859880813835385),
    (100.0, 4.600161852738087),
    (250.0, 5.519459584531046),
    (600.0, 6.396096090401396),
    (1000.0, 6.907255195648812),
    (2500.0, 7.823845997522959),
    (6000.0, 8.699431412562044),
    (10000.0, 9.210290371142849),
    (25000.0, 10.126611103717005),
    (60000.0, 11.002091507847757),
    (100000.0, 11.512920464961896),
    (250000.0, 12.42921419684305),
    (600000.0, 13.30468410086472),
    (1000000.0, 13.815510057964191),
    (2500000.0, 14.731801089838417),
    (6000000.0, 15.607269943858993),
    (10000000.0, 16.11809560095832),
    (25000000.0, 17.034386362832475),
    (60000000.0, 17.90985511185304),
    (100000000.0, 18.420680738952367),
];
pub const TRIGAMMA: &[(f64, f64)] = &[
    (1e-08, 1.0000000000000002e+16),
    (2.5e-08, 1600000000000001.8),
    (6.000000000000001e-08, 277777777777779.34),
    (1e-07, 100000000000001.66),
    (2.5e-07, 16000000000001.646),
    (6e-07, 2777777777779.423),
    (1e-06, 1000000000001.645),
    (2.4999999999999998e-06, 160000000001.64496),
    (6e-06, 27777777779.422695),
    (1e-05, 10000000001.644909),
    (2.5e-05, 1600000001.6448739),
    (6.000000000000001e-05, 277777779.42256755),
    (0.0001, 100000001.64469367),
    (0.00025, 16000001.644333242),
    (0.0006000000000000001, 2777779.4212705437),
    (0.001, 1000001.6425331958),
    (0.0025, 160001.63894401127),
    (0.006, 27779.408403163336),
    (0.01, 10001.621213528313),
    (0.025, 1601.5867976993522),
    (0.06, 279.2893197277689),
    (0.1, 101.43329915079275),
    (0.25, 17.19732915450711),
    (0.5, 4.934802200544679),
    (0.6000000000000001, 3.636209670902357),
    (0.999, 1.6473414317770505),
    (1.0, 1.6449340668482264),
    (1.0001, 1.6446936879331444),
    (1.3, 1.1342534349966193),
    (1.45, 0.9780787885942666),
    (1.4616, 0.9677007114650835),
    (1.47, 0.9603162090511507),
    (1.6, 0.8584318931245798),
    (1.999, 0.6453384277720445),
    (2.0001, 0.6448936579371437),
    (2.5, 0.49035775610023485),
    (3.7, 0.3100378576700383),
    (6.0, 0.18132295573711532),
    (7.25, 0.14787923315893217),
    (9.99, 0.10527695014824179),
    (10.0, 0.10516633568168575),
    (10.01, 0.10505595320551508),
    (10.5, 0.09991695605912673),
    (25.0, 0.04081066325722558),
    (60.0, 0.016806327117635387),
    (100.0, 0.010050166663333571),
    (250.0, 0.004008010666632534),
    (600.0, 0.001668056327160065),
    (1000.0, 0.0010005001666666333),
    (2500.0, 0.0004000800106666663),
    (6000.0, 0.0001666805563271605),
    (10000.0, 0.00010000500016666666),
    (25000.0, 4.0000800010666664e-05),
    (60000.0, 1.6666805556327162e-05),
    (100000.0, 1.0000050000166667e-05),
    (250000.0, 4.000008000010667e-06),
    (600000.0, 1.6666680555563271e-06),
    (1000000.0, 1.0000005000001667e-06),
    (2500000.0, 4.0000008000001065e-07),
    (6000000.0, 1.6666668055555633e-07),
    (10000000.0, 1.0000000500000017e-07),
    (25000000.0, 4.000000080000001e-08),
    (60000000.0, 1.6666666805555556e-08),
    (100000000.0, 1.000000005e-08),
    (1000000.0, 1.0000005000001667e-06),
];
pub const LOG_MINUS_DIGAMMA: &[(f64, f64)] = &[
    (1e-08, 99999982.1565349),
    (2.5e-08, 39999983.07282561),
    (6.000000000000001e-08, 16666650.614960955),
    (1e-07, 9999984.45911985),
    (2.5e-07, 3999985.3754103347),
    (6e-07, 1666652.9175451628),
    (1e-06, 999986.7617034621),
    (2.4999999999999998e-06, 399987.6779917265),
    (6e-06, 166655.22012137328),
    (1e-05, 99989.0642737507),
    (2.5e-05, 39989.98053980921),
    (6.000000000000001e-05, 16657.522617644107),
    (0.0001, 9991.366710811537),
    (0.00025, 3992.2827548663945),
    (0.0006000000000000001, 1659.8243149008867),
    (0.001, 993.6678166528282),
    (0.0025, 394.5816462786112),
    (0.006, 162.1180599590157),
    (0.01, 95.95571527188058),
    (0.025, 36.84794762873545),
    (0.06, 14.335881885721456),
    (0.1, 8.12116984741703),
    (0.25, 2.8411591722563747),
    (0.5, 1.2703628454614782),
    (0.6000000000000001, 1.0297935901271995),
    (0.999, 0.5778613017750619),
    (1.0, 0.5772156649015329),
    (1.0001, 0.5771511785146681),
    (1.3, 0.4315551533342907),
    (1.45, 0.3828799790189289),
    (1.4616, 0.37956283233289023),
    (1.47, 0.37719591177928),
    (1.6, 0.3439561764722593),
    (1.999, 0.27050785662590743),
    (2.0001, 0.2703483528253217),
    (2.5, 0.2131340912289119),
    (3.7, 0.14117928028866736),
    (6.0, 0.08564180079625452),
    (7.25, 0.07054794198284738),
    (9.99, 0.05088421982926105),
    (10.0, 0.05083250392732458),
    (10.01, 0.05078089300899346),
    (10.5, 0.048374222865791315),
    (25.0, 0.02013331201622674),
    (60.0, 0.008356480838562394),
    (100.0, 0.005008333250003967),
    (250.0, 0.0020013333312000163),
    (600.0, 0.0008335648147505145),
    (1000.0, 0.000500083333325),
    (2500.0, 0.00020001333333312),
    (6000.0, 8.333564814814171e-05),
    (10000.0, 5.00008333333325e-05),
    (25000.0, 2.000013333333331e-05),
    (60000.0, 8.333356481481481e-06),
    (100000.0, 5.000008333333333e-06),
    (250000.0, 2.0000013333333333e-06),
    (600000.0, 8.333335648148148e-07),
    (1000000.0, 5.000000833333334e-07),
    (2500000.0, 2.0000001333333334e-07),
    (6000000.0, 8.333333564814815e-08),
    (10000000.0, 5.000000083333333e-08),
    (25000000.0, 2.0000000133333333e-08),
    (60000000.0, 8.333333356481482e-09),
    (100000000.0, 5.0000000083333336e-09),
];
pub const A_SQ_TRIGAMMA_MINUS_A: &[(f64, f64)] = &[
    (1e-08, 0.9999999900000002),
    (2.5e-08, 0.999999975000001),
    (6.000000000000001e-08, 0.9999999400000059),
    (1e-07, 0.9999999000000165),
    (2.5e-07, 0.9999997500001028),
    (6e-07, 0.9999994000005922),
    (1e-06, 0.9999990000016449),
    (2.4999999999999998e-06, 0.9999975000102808),
    (6e-06, 0.9999940000592171),
    (1e-05, 0.999990000164491),
    (2.5e-05, 0.9999750010280463),
    (6.000000000000001e-05, 0.9999400059212434),
    (0.0001, 0.9999000164469369),
    (0.00025, 0.9997501027708275),
    (0.0006000000000000001, 0.9994005916573959),
    (0.001, 0.9990016425331959),
    (0.0025, 0.9975102434000706),
    (0.006, 0.9940587025138802),
    (0.01, 0.9901621213528313),
    (0.025, 0.9759917485620953),
    (0.06, 0.945441551019968),
    (0.1, 0.9143329915079276),
    (0.25, 0.8248330721566944),
    (0.5, 0.7337005501361699),
    (0.6000000000000001, 0.7090354815248487),
    (0.999, 0.6450483962549283),
    (1.0, 0.6449340668482264),
    (1.0001, 0.6449226431176678),
    (1.3, 0.6168883051442867),
    (1.45, 0.6064106530194453),
    (1.4616, 0.6056744115967583),
    (1.47, 0.6051472961386315),
    (1.6, 0.5975856463989245),
    (1.999, 0.5797730027155178),
    (2.0001, 0.5797325956606867),
    (2.5, 0.5647359756264679),
    (3.7, 0.5444182715028246),
    (6.0, 0.5276264065361517),
    (7.25, 0.5229021929163722),
    (9.99, 0.5166501524895452),
    (10.0, 0.5166335681685746),
    (10.01, 0.5166170167879325),
    (10.5, 0.5158444055187223),
    (25.0, 0.506664535765987),
    (60.0, 0.5027776234873975),
    (100.0, 0.5016666333357139),
    (250.0, 0.5006666645333577),
    (600.0, 0.500277777623457),
    (1000.0, 0.5001666666333333),
    (2500.0, 0.5000666666645334),
    (6000.0, 0.5000277777776234),
    (10000.0, 0.5000166666666334),
    (25000.0, 0.5000066666666645),
    (60000.0, 0.5000027777777776),
    (100000.0, 0.5000016666666667),
    (250000.0, 0.5000006666666666),
    (600000.0, 0.5000002777777778),
    (1000000.0, 0.5000001666666667),
    (2500000.0, 0.5000000666666666),
    (6000000.0, 0.5000000277777777),
    (10000000.0, 0.5000000166666667),
    (25000000.0, 0.5000000066666667),
    (60000000.0, 0.5000000027777778),
    (100000000.0, 0.5000000016666667),
];
pub const REG_LOWER_INC_GAMMA: &[(f64, f64, f64)] = &[
    (3.7, 2.2, 0.22976730879644322),
    (0.01, 0.001, 0.938570652526129),
    (0.5, 1e-10, 1.1283791670579e-05),
    (1.0, 0.25, 0.22119921692859512),
    (50.0, 45.0, 0.24680203440017026),
    (100.0, 120.0, 0.9721362601094793),
    (2.0, 30.0, 0.9999999999970991),
    (0.3, 5.0, 0.9993486812492816),
    (7.5, 7.5, 0.5485827887742748),
    (1e-06, 0.001, 0.9999936684798586),
    (1000.0, 990.0, 0.3795213785379639),
];
