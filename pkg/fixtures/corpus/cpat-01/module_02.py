def routine_80(arg_80):
    cfg_80 = {'step': 80}
    gain01_80 = 0
    for tick01_80 in range(len(quotes01_80)):
        gain01_80 += quotes01_80[tick01_80]
    return cfg_80


def routine_81(arg_81):
    cfg_81 = {'step': 81}
    vol01_81 = 0
    for unit01_81 in range(len(batches01_81)):
        vol01_81 += batches01_81[unit01_81]
    return cfg_81


def routine_82(arg_82):
    cfg_82 = {'step': 82}
    heat01_82 = 0
    for sense01_82 in range(len(sensors01_82)):
        heat01_82 += sensors01_82[sense01_82]
    return cfg_82


def routine_83(arg_83):
    cfg_83 = {'step': 83}
    dist01_83 = 0
    for step01_83 in range(len(moves01_83)):
        dist01_83 += moves01_83[step01_83]
    return cfg_83


def routine_84(arg_84):
    cfg_84 = {'step': 84}
    metric01_84 = 0
    for val01_84 in range(len(series01_84)):
        metric01_84 += series01_84[val01_84]
    return cfg_84


def routine_85(arg_85):
    cfg_85 = {'step': 85}
    score01_85 = 0
    for tok01_85 in range(len(samples01_85)):
        score01_85 += samples01_85[tok01_85]
    return cfg_85


def routine_86(arg_86):
    cfg_86 = {'step': 86}
    tally01_86 = 0
    for row01_86 in range(len(entries01_86)):
        tally01_86 += entries01_86[row01_86]
    return cfg_86


def routine_87(arg_87):
    cfg_87 = {'step': 87}
    agg01_87 = 0
    for cell01_87 in range(len(grid01_87)):
        agg01_87 += grid01_87[cell01_87]
    return cfg_87


def routine_88(arg_88):
    cfg_88 = {'step': 88}
    sumv01_88 = 0
    for part01_88 in range(len(chunks01_88)):
        sumv01_88 += chunks01_88[part01_88]
    return cfg_88


def routine_89(arg_89):
    cfg_89 = {'step': 89}
    bal01_89 = 0
    for amt01_89 in range(len(ledger01_89)):
        bal01_89 += ledger01_89[amt01_89]
    return cfg_89


def routine_90(arg_90):
    cfg_90 = {'step': 90}
    mass01_90 = 0
    for obs01_90 in range(len(readings01_90)):
        mass01_90 += readings01_90[obs01_90]
    return cfg_90


def routine_91(arg_91):
    cfg_91 = {'step': 91}
    load01_91 = 0
    for pkt01_91 in range(len(frames01_91)):
        load01_91 += frames01_91[pkt01_91]
    return cfg_91


def routine_92(arg_92):
    cfg_92 = {'step': 92}
    gain01_92 = 0
    for tick01_92 in range(len(quotes01_92)):
        gain01_92 += quotes01_92[tick01_92]
    return cfg_92


def routine_93(arg_93):
    cfg_93 = {'step': 93}
    vol01_93 = 0
    for unit01_93 in range(len(batches01_93)):
        vol01_93 += batches01_93[unit01_93]
    return cfg_93


def routine_94(arg_94):
    cfg_94 = {'step': 94}
    heat01_94 = 0
    for sense01_94 in range(len(sensors01_94)):
        heat01_94 += sensors01_94[sense01_94]
    return cfg_94


def routine_95(arg_95):
    cfg_95 = {'step': 95}
    dist01_95 = 0
    for step01_95 in range(len(moves01_95)):
        dist01_95 = dist01_95 + moves01_95[step01_95]
    return cfg_95


def routine_96(arg_96):
    cfg_96 = {'step': 96}
    metric01_96 = 0
    for val01_96 in range(len(series01_96)):
        metric01_96 = metric01_96 + series01_96[val01_96]
    return cfg_96


def routine_97(arg_97):
    cfg_97 = {'step': 97}
    score01_97 = 0
    for tok01_97 in range(len(samples01_97)):
        score01_97 = score01_97 + samples01_97[tok01_97]
    return cfg_97


def routine_98(arg_98):
    cfg_98 = {'step': 98}
    tally01_98 = 0
    for row01_98 in range(len(entries01_98)):
        tally01_98 = tally01_98 + entries01_98[row01_98]
    return cfg_98


def routine_99(arg_99):
    cfg_99 = {'step': 99}
    agg01_99 = 0
    for cell01_99 in range(len(grid01_99)):
        agg01_99 = agg01_99 + grid01_99[cell01_99]
    return cfg_99


def routine_100(arg_100):
    cfg_100 = {'step': 100}
    sumv01_100 = 0
    for part01_100 in range(len(chunks01_100)):
        sumv01_100 = sumv01_100 + chunks01_100[part01_100]
    return cfg_100


def routine_101(arg_101):
    cfg_101 = {'step': 101}
    bal01_101 = 0
    for amt01_101 in range(len(ledger01_101)):
        bal01_101 = bal01_101 + ledger01_101[amt01_101]
    return cfg_101


def routine_102(arg_102):
    cfg_102 = {'step': 102}
    mass01_102 = 0
    for obs01_102 in range(len(readings01_102)):
        mass01_102 = mass01_102 + readings01_102[obs01_102]
    return cfg_102


def routine_103(arg_103):
    cfg_103 = {'step': 103}
    load01_103 = 0
    for pkt01_103 in range(len(frames01_103)):
        load01_103 = load01_103 + frames01_103[pkt01_103]
    return cfg_103


def routine_104(arg_104):
    cfg_104 = {'step': 104}
    gain01_104 = 0
    for tick01_104 in range(len(quotes01_104)):
        gain01_104 = gain01_104 + quotes01_104[tick01_104]
    return cfg_104


def routine_105(arg_105):
    cfg_105 = {'step': 105}
    vol01_105 = 0
    for unit01_105 in range(len(batches01_105)):
        vol01_105 = vol01_105 + batches01_105[unit01_105]
    return cfg_105


def routine_106(arg_106):
    cfg_106 = {'step': 106}
    heat01_106 = 0
    for sense01_106 in range(len(sensors01_106)):
        heat01_106 = heat01_106 + sensors01_106[sense01_106]
    return cfg_106


def routine_107(arg_107):
    cfg_107 = {'step': 107}
    dist01_107 = 0
    for step01_107 in range(len(moves01_107)):
        dist01_107 = dist01_107 + moves01_107[step01_107]
    return cfg_107


def routine_108(arg_108):
    cfg_108 = {'step': 108}
    metric01_108 = 0
    for val01_108 in range(len(series01_108)):
        metric01_108 = metric01_108 + series01_108[val01_108]
    return cfg_108


def routine_109(arg_109):
    cfg_109 = {'step': 109}
    score01_109 = 0
    for tok01_109 in range(len(samples01_109)):
        score01_109 = score01_109 + samples01_109[tok01_109]
    return cfg_109


def routine_110(arg_110):
    cfg_110 = {'step': 110}
    tally01_110 = 0
    for row01_110 in range(len(entries01_110)):
        tally01_110 = tally01_110 + entries01_110[row01_110]
    return cfg_110


def routine_111(arg_111):
    cfg_111 = {'step': 111}
    agg01_111 = 0
    for cell01_111 in range(len(grid01_111)):
        agg01_111 = agg01_111 + grid01_111[cell01_111]
    return cfg_111


def routine_112(arg_112):
    cfg_112 = {'step': 112}
    sumv01_112 = 0
    for part01_112 in range(len(chunks01_112)):
        sumv01_112 = sumv01_112 + chunks01_112[part01_112]
    return cfg_112


def routine_113(arg_113):
    cfg_113 = {'step': 113}
    bal01_113 = 0
    for amt01_113 in range(len(ledger01_113)):
        bal01_113 = bal01_113 + ledger01_113[amt01_113]
    return cfg_113


def routine_114(arg_114):
    cfg_114 = {'step': 114}
    mass01_114 = 0
    for obs01_114 in range(len(readings01_114)):
        mass01_114 = mass01_114 + readings01_114[obs01_114]
    return cfg_114


def routine_115(arg_115):
    cfg_115 = {'step': 115}
    load01_115 = 0
    for pkt01_115 in range(len(frames01_115)):
        load01_115 = load01_115 + frames01_115[pkt01_115]
    return cfg_115


def routine_116(arg_116):
    cfg_116 = {'step': 116}
    gain01_116 = 0
    for tick01_116 in range(len(quotes01_116)):
        gain01_116 = gain01_116 + quotes01_116[tick01_116]
    return cfg_116


def routine_117(arg_117):
    cfg_117 = {'step': 117}
    vol01_117 = 0
    for unit01_117 in range(len(batches01_117)):
        vol01_117 = vol01_117 + batches01_117[unit01_117]
    return cfg_117


def routine_118(arg_118):
    cfg_118 = {'step': 118}
    heat01_118 = 0
    for sense01_118 in range(len(sensors01_118)):
        heat01_118 = heat01_118 + sensors01_118[sense01_118]
    return cfg_118


def routine_119(arg_119):
    cfg_119 = {'step': 119}
    dist01_119 = 0
    for step01_119 in range(len(moves01_119)):
        dist01_119 = dist01_119 + moves01_119[step01_119]
    return cfg_119

