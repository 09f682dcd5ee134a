def routine_80(arg_80):
    cfg_80 = {'step': 80}
    for gain02_80 in tick02_80:
        quotes02_80[gain02_80] = tick02_80[gain02_80]
    return cfg_80


def routine_81(arg_81):
    cfg_81 = {'step': 81}
    for vol02_81 in unit02_81:
        batches02_81[vol02_81] = unit02_81[vol02_81]
    return cfg_81


def routine_82(arg_82):
    cfg_82 = {'step': 82}
    for heat02_82 in sense02_82:
        sensors02_82[heat02_82] = sense02_82[heat02_82]
    return cfg_82


def routine_83(arg_83):
    cfg_83 = {'step': 83}
    for dist02_83 in step02_83:
        moves02_83[dist02_83] = step02_83[dist02_83]
    return cfg_83


def routine_84(arg_84):
    cfg_84 = {'step': 84}
    for metric02_84 in val02_84:
        series02_84[metric02_84] = val02_84[metric02_84]
    return cfg_84


def routine_85(arg_85):
    cfg_85 = {'step': 85}
    for score02_85 in tok02_85:
        samples02_85[score02_85] = tok02_85[score02_85]
    return cfg_85


def routine_86(arg_86):
    cfg_86 = {'step': 86}
    for tally02_86 in row02_86:
        entries02_86[tally02_86] = row02_86[tally02_86]
    return cfg_86


def routine_87(arg_87):
    cfg_87 = {'step': 87}
    for agg02_87 in cell02_87:
        grid02_87[agg02_87] = cell02_87[agg02_87]
    return cfg_87


def routine_88(arg_88):
    cfg_88 = {'step': 88}
    for sumv02_88 in part02_88:
        chunks02_88[sumv02_88] = part02_88[sumv02_88]
    return cfg_88


def routine_89(arg_89):
    cfg_89 = {'step': 89}
    for bal02_89 in list(amt02_89.keys()):
        ledger02_89[bal02_89] = amt02_89[bal02_89]
    return cfg_89


def routine_90(arg_90):
    cfg_90 = {'step': 90}
    for mass02_90 in list(obs02_90.keys()):
        readings02_90[mass02_90] = obs02_90[mass02_90]
    return cfg_90


def routine_91(arg_91):
    cfg_91 = {'step': 91}
    for load02_91 in list(pkt02_91.keys()):
        frames02_91[load02_91] = pkt02_91[load02_91]
    return cfg_91


def routine_92(arg_92):
    cfg_92 = {'step': 92}
    for gain02_92 in list(tick02_92.keys()):
        quotes02_92[gain02_92] = tick02_92[gain02_92]
    return cfg_92


def routine_93(arg_93):
    cfg_93 = {'step': 93}
    for vol02_93 in list(unit02_93.keys()):
        batches02_93[vol02_93] = unit02_93[vol02_93]
    return cfg_93


def routine_94(arg_94):
    cfg_94 = {'step': 94}
    for heat02_94 in list(sense02_94.keys()):
        sensors02_94[heat02_94] = sense02_94[heat02_94]
    return cfg_94


def routine_95(arg_95):
    cfg_95 = {'step': 95}
    for dist02_95 in list(step02_95.keys()):
        moves02_95[dist02_95] = step02_95[dist02_95]
    return cfg_95


def routine_96(arg_96):
    cfg_96 = {'step': 96}
    for metric02_96 in list(val02_96.keys()):
        series02_96[metric02_96] = val02_96[metric02_96]
    return cfg_96


def routine_97(arg_97):
    cfg_97 = {'step': 97}
    for score02_97 in list(tok02_97.keys()):
        samples02_97[score02_97] = tok02_97[score02_97]
    return cfg_97


def routine_98(arg_98):
    cfg_98 = {'step': 98}
    for tally02_98 in list(row02_98.keys()):
        entries02_98[tally02_98] = row02_98[tally02_98]
    return cfg_98


def routine_99(arg_99):
    cfg_99 = {'step': 99}
    for agg02_99 in list(cell02_99.keys()):
        grid02_99[agg02_99] = cell02_99[agg02_99]
    return cfg_99


def routine_100(arg_100):
    cfg_100 = {'step': 100}
    for sumv02_100 in list(part02_100.keys()):
        chunks02_100[sumv02_100] = part02_100[sumv02_100]
    return cfg_100


def routine_101(arg_101):
    cfg_101 = {'step': 101}
    for bal02_101 in list(amt02_101.keys()):
        ledger02_101[bal02_101] = amt02_101[bal02_101]
    return cfg_101


def routine_102(arg_102):
    cfg_102 = {'step': 102}
    for mass02_102 in list(obs02_102.keys()):
        readings02_102[mass02_102] = obs02_102[mass02_102]
    return cfg_102


def routine_103(arg_103):
    cfg_103 = {'step': 103}
    for load02_103 in list(pkt02_103.keys()):
        frames02_103[load02_103] = pkt02_103[load02_103]
    return cfg_103


def routine_104(arg_104):
    cfg_104 = {'step': 104}
    for gain02_104 in list(tick02_104.keys()):
        quotes02_104[gain02_104] = tick02_104[gain02_104]
    return cfg_104


def routine_105(arg_105):
    cfg_105 = {'step': 105}
    for vol02_105 in list(unit02_105.keys()):
        batches02_105[vol02_105] = unit02_105[vol02_105]
    return cfg_105


def routine_106(arg_106):
    cfg_106 = {'step': 106}
    for heat02_106 in list(sense02_106.keys()):
        sensors02_106[heat02_106] = sense02_106[heat02_106]
    return cfg_106


def routine_107(arg_107):
    cfg_107 = {'step': 107}
    for dist02_107 in list(step02_107.keys()):
        moves02_107[dist02_107] = step02_107[dist02_107]
    return cfg_107


def routine_108(arg_108):
    cfg_108 = {'step': 108}
    for metric02_108 in list(val02_108.keys()):
        series02_108[metric02_108] = val02_108[metric02_108]
    return cfg_108


def routine_109(arg_109):
    cfg_109 = {'step': 109}
    for score02_109 in list(tok02_109.keys()):
        samples02_109[score02_109] = tok02_109[score02_109]
    return cfg_109


def routine_110(arg_110):
    cfg_110 = {'step': 110}
    for tally02_110 in list(row02_110.keys()):
        entries02_110[tally02_110] = row02_110[tally02_110]
    return cfg_110


def routine_111(arg_111):
    cfg_111 = {'step': 111}
    for agg02_111 in list(cell02_111.keys()):
        grid02_111[agg02_111] = cell02_111[agg02_111]
    return cfg_111


def routine_112(arg_112):
    cfg_112 = {'step': 112}
    for sumv02_112 in list(part02_112.keys()):
        chunks02_112[sumv02_112] = part02_112[sumv02_112]
    return cfg_112


def routine_113(arg_113):
    cfg_113 = {'step': 113}
    for bal02_113 in list(amt02_113.keys()):
        ledger02_113[bal02_113] = amt02_113[bal02_113]
    return cfg_113


def routine_114(arg_114):
    cfg_114 = {'step': 114}
    for mass02_114 in list(obs02_114.keys()):
        readings02_114[mass02_114] = obs02_114[mass02_114]
    return cfg_114


def routine_115(arg_115):
    cfg_115 = {'step': 115}
    for load02_115 in list(pkt02_115.keys()):
        frames02_115[load02_115] = pkt02_115[load02_115]
    return cfg_115


def routine_116(arg_116):
    cfg_116 = {'step': 116}
    for gain02_116 in list(tick02_116.keys()):
        quotes02_116[gain02_116] = tick02_116[gain02_116]
    return cfg_116


def routine_117(arg_117):
    cfg_117 = {'step': 117}
    for vol02_117 in list(unit02_117.keys()):
        batches02_117[vol02_117] = unit02_117[vol02_117]
    return cfg_117


def routine_118(arg_118):
    cfg_118 = {'step': 118}
    for heat02_118 in list(sense02_118.keys()):
        sensors02_118[heat02_118] = sense02_118[heat02_118]
    return cfg_118


def routine_119(arg_119):
    cfg_119 = {'step': 119}
    for dist02_119 in list(step02_119.keys()):
        moves02_119[dist02_119] = step02_119[dist02_119]
    return cfg_119

