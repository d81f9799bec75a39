"""Knot lists of the census rows, transcribed from the printed tables."""

ROWS = {
    'none': (
        '9_32', '9_33', '10_80', '10_82', '10_83', '10_84', '10_85', '10_86', '10_87', '10_90',
        '10_91', '10_92', '10_93', '10_94', '10_95', '10_102', '10_106', '10_107', '10_110', '10_117',
        '10_119', '10_148', '10_149', '10_150', '10_151', '10_153',
    ),
    's0s0': (
        '8_17', '10_79', '10_81', '10_88', '10_109', '10_115', '10_118',
    ),
    's1s0': (
        '8_10', '8_16', '8_20', '9_22', '9_24', '9_25', '9_29', '9_30', '9_34', '9_36',
        '9_38', '9_39', '9_41', '9_42', '9_43', '9_44', '9_45', '9_47', '9_49', '10_46',
        '10_47', '10_48', '10_49', '10_50', '10_51', '10_52', '10_53', '10_54', '10_55', '10_56',
        '10_57', '10_59', '10_62', '10_65', '10_70', '10_71', '10_72', '10_73', '10_77', '10_89',
        '10_96', '10_97', '10_100', '10_101', '10_103', '10_104', '10_105', '10_108', '10_111', '10_112',
        '10_113', '10_114', '10_116', '10_121', '10_125', '10_126', '10_127', '10_128', '10_129', '10_130',
        '10_131', '10_132', '10_133', '10_134', '10_135', '10_137', '10_140', '10_143', '10_152', '10_154',
        '10_156', '10_158', '10_159', '10_160', '10_161', '10_162', '10_163', '10_164', '10_165',
    ),
    's1e-unknotted': (
        '10_67', '10_147',
    ),
    's1e-knotted': (
        '10_98',
    ),
    'both-unknotted': (
        '4_1', '5_2', '6_1', '6_2', '6_3', '7_2', '7_3', '7_4', '7_5', '7_6',
        '7_7', '8_1', '8_2', '8_3', '8_4', '8_6', '8_7', '9_2', '9_3', '9_4',
        '9_5', '9_6', '9_7', '9_8', '9_9', '9_10', '9_11', '9_12', '9_13', '9_14',
        '9_15', '9_17', '9_18', '9_19', '9_20', '9_21', '9_23', '9_26', '9_27', '9_31',
        '9_35', '9_37', '9_46', '9_48', '10_1', '10_2', '10_3', '10_4', '10_5', '10_6',
        '10_7', '10_8', '10_9', '10_10', '10_11', '10_12', '10_13', '10_14', '10_15', '10_16',
        '10_17', '10_18', '10_19', '10_20', '10_21', '10_22', '10_23', '10_24', '10_25', '10_26',
        '10_27', '10_28', '10_29', '10_30', '10_31', '10_32', '10_33', '10_34', '10_35', '10_36',
        '10_37', '10_38', '10_39', '10_40', '10_41', '10_42', '10_43', '10_44', '10_45', '10_68',
        '10_69', '10_74', '10_75', '10_145', '10_146',
    ),
    's1s0-s0e': (
        '10_99', '10_123',
    ),
    's1s0-ee': (
        '10_155', '10_157',
    ),
    'both-knotted': (
        '8_5', '8_15', '8_21', '9_16', '9_28', '9_40', '10_58', '10_60', '10_61', '10_63',
        '10_66', '10_76', '10_78', '10_120', '10_122', '10_136', '10_138', '10_139', '10_141', '10_142',
        '10_144',
    ),
    'torus-both-unknotted': (
        '3_1', '5_1', '7_1', '9_1',
    ),
    'torus-s1s0-ee': (
        '10_124',
    ),
}

HIGHER = {
    'D4': ('4_1', '6_3', '7_4', '7_7', '8_3', '8_9', '8_12', '9_10', '9_17', '9_23', '9_31', '10_17', '10_33', '10_37', '10_43', '10_45', '10_157'),
    'D3': ('9_41', '9_47', '9_49'),
    'D6': ('9_35', '9_40', '9_48', '10_75'),
    'D8': ('8_18',),
    'D10': ('10_123',),
}
