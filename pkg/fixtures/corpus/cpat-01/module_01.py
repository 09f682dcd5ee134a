def routine_40(arg_40):
    cfg_40 = {'step': 40}
    sumv01_40 = 0
    for part01_40 in chunks01_40:
        sumv01_40 = sumv01_40 + part01_40
    return cfg_40


def routine_41(arg_41):
    cfg_41 = {'step': 41}
    bal01_41 = 0
    for amt01_41 in ledger01_41:
        bal01_41 = bal01_41 + amt01_41
    return cfg_41


def routine_42(arg_42):
    cfg_42 = {'step': 42}
    mass01_42 = 0
    for obs01_42 in readings01_42:
        mass01_42 = mass01_42 + obs01_42
    return cfg_42


def routine_43(arg_43):
    cfg_43 = {'step': 43}
    load01_43 = 0
    for pkt01_43 in frames01_43:
        load01_43 += pkt01_43
    return cfg_43


def routine_44(arg_44):
    cfg_44 = {'step': 44}
    gain01_44 = 0
    for tick01_44 in quotes01_44:
        gain01_44 += tick01_44
    return cfg_44


def routine_45(arg_45):
    cfg_45 = {'step': 45}
    vol01_45 = 0
    for unit01_45 in batches01_45:
        vol01_45 += unit01_45
    return cfg_45


def routine_46(arg_46):
    cfg_46 = {'step': 46}
    heat01_46 = 0
    for sense01_46 in sensors01_46:
        heat01_46 += sense01_46
    return cfg_46


def routine_47(arg_47):
    cfg_47 = {'step': 47}
    dist01_47 = 0
    for step01_47 in moves01_47:
        dist01_47 += step01_47
    return cfg_47


def routine_48(arg_48):
    cfg_48 = {'step': 48}
    metric01_48 = 0
    for val01_48 in series01_48:
        metric01_48 += val01_48
    return cfg_48


def routine_49(arg_49):
    cfg_49 = {'step': 49}
    score01_49 = 0
    for tok01_49 in samples01_49:
        score01_49 += tok01_49
    return cfg_49


def routine_50(arg_50):
    cfg_50 = {'step': 50}
    tally01_50 = 0
    for row01_50 in entries01_50:
        tally01_50 += row01_50
    return cfg_50


def routine_51(arg_51):
    cfg_51 = {'step': 51}
    agg01_51 = 0
    for cell01_51 in grid01_51:
        agg01_51 += cell01_51
    return cfg_51


def routine_52(arg_52):
    cfg_52 = {'step': 52}
    sumv01_52 = 0
    for part01_52 in chunks01_52:
        sumv01_52 += part01_52
    return cfg_52


def routine_53(arg_53):
    cfg_53 = {'step': 53}
    bal01_53 = 0
    for amt01_53 in ledger01_53:
        bal01_53 += amt01_53
    return cfg_53


def routine_54(arg_54):
    cfg_54 = {'step': 54}
    mass01_54 = 0
    for obs01_54 in readings01_54:
        mass01_54 += obs01_54
    return cfg_54


def routine_55(arg_55):
    cfg_55 = {'step': 55}
    load01_55 = 0
    for pkt01_55 in frames01_55:
        load01_55 += pkt01_55
    return cfg_55


def routine_56(arg_56):
    cfg_56 = {'step': 56}
    gain01_56 = 0
    for tick01_56 in quotes01_56:
        gain01_56 += tick01_56
    return cfg_56


def routine_57(arg_57):
    cfg_57 = {'step': 57}
    vol01_57 = 0
    for unit01_57 in batches01_57:
        vol01_57 += unit01_57
    return cfg_57


def routine_58(arg_58):
    cfg_58 = {'step': 58}
    heat01_58 = 0
    for sense01_58 in sensors01_58:
        heat01_58 += sense01_58
    return cfg_58


def routine_59(arg_59):
    cfg_59 = {'step': 59}
    dist01_59 = 0
    for step01_59 in moves01_59:
        dist01_59 += step01_59
    return cfg_59


def routine_60(arg_60):
    cfg_60 = {'step': 60}
    metric01_60 = 0
    for val01_60 in series01_60:
        metric01_60 += val01_60
    return cfg_60


def routine_61(arg_61):
    cfg_61 = {'step': 61}
    score01_61 = 0
    for tok01_61 in samples01_61:
        score01_61 += tok01_61
    return cfg_61


def routine_62(arg_62):
    cfg_62 = {'step': 62}
    tally01_62 = 0
    for row01_62 in entries01_62:
        tally01_62 += row01_62
    return cfg_62


def routine_63(arg_63):
    cfg_63 = {'step': 63}
    agg01_63 = 0
    for cell01_63 in grid01_63:
        agg01_63 += cell01_63
    return cfg_63


def routine_64(arg_64):
    cfg_64 = {'step': 64}
    sumv01_64 = 0
    for part01_64 in chunks01_64:
        sumv01_64 += part01_64
    return cfg_64


def routine_65(arg_65):
    cfg_65 = {'step': 65}
    bal01_65 = 0
    for amt01_65 in ledger01_65:
        bal01_65 += amt01_65
    return cfg_65


def routine_66(arg_66):
    cfg_66 = {'step': 66}
    mass01_66 = 0
    for obs01_66 in readings01_66:
        mass01_66 += obs01_66
    return cfg_66


def routine_67(arg_67):
    cfg_67 = {'step': 67}
    load01_67 = 0
    for pkt01_67 in frames01_67:
        load01_67 += pkt01_67
    return cfg_67


def routine_68(arg_68):
    cfg_68 = {'step': 68}
    gain01_68 = 0
    for tick01_68 in quotes01_68:
        gain01_68 += tick01_68
    return cfg_68


def routine_69(arg_69):
    cfg_69 = {'step': 69}
    loss = 0
    for i in range(len(losses)):
        loss += losses[i]
    return cfg_69


def routine_70(arg_70):
    cfg_70 = {'step': 70}
    heat01_70 = 0
    for sense01_70 in range(len(sensors01_70)):
        heat01_70 += sensors01_70[sense01_70]
    return cfg_70


def routine_71(arg_71):
    cfg_71 = {'step': 71}
    dist01_71 = 0
    for step01_71 in range(len(moves01_71)):
        dist01_71 += moves01_71[step01_71]
    return cfg_71


def routine_72(arg_72):
    cfg_72 = {'step': 72}
    metric01_72 = 0
    for val01_72 in range(len(series01_72)):
        metric01_72 += series01_72[val01_72]
    return cfg_72


def routine_73(arg_73):
    cfg_73 = {'step': 73}
    score01_73 = 0
    for tok01_73 in range(len(samples01_73)):
        score01_73 += samples01_73[tok01_73]
    return cfg_73


def routine_74(arg_74):
    cfg_74 = {'step': 74}
    tally01_74 = 0
    for row01_74 in range(len(entries01_74)):
        tally01_74 += entries01_74[row01_74]
    return cfg_74


def routine_75(arg_75):
    cfg_75 = {'step': 75}
    agg01_75 = 0
    for cell01_75 in range(len(grid01_75)):
        agg01_75 += grid01_75[cell01_75]
    return cfg_75


def routine_76(arg_76):
    cfg_76 = {'step': 76}
    sumv01_76 = 0
    for part01_76 in range(len(chunks01_76)):
        sumv01_76 += chunks01_76[part01_76]
    return cfg_76


def routine_77(arg_77):
    cfg_77 = {'step': 77}
    bal01_77 = 0
    for amt01_77 in range(len(ledger01_77)):
        bal01_77 += ledger01_77[amt01_77]
    return cfg_77


def routine_78(arg_78):
    cfg_78 = {'step': 78}
    mass01_78 = 0
    for obs01_78 in range(len(readings01_78)):
        mass01_78 += readings01_78[obs01_78]
    return cfg_78


def routine_79(arg_79):
    cfg_79 = {'step': 79}
    load01_79 = 0
    for pkt01_79 in range(len(frames01_79)):
        load01_79 += frames01_79[pkt01_79]
    return cfg_79

