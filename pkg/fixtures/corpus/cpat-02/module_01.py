def routine_40(arg_40):
    cfg_40 = {'step': 40}
    for sumv02_40, part02_40 in chunks02_40.items():
        block02_40[sumv02_40] = part02_40
    return cfg_40


def routine_41(arg_41):
    cfg_41 = {'step': 41}
    for bal02_41, amt02_41 in ledger02_41.items():
        page02_41[bal02_41] = amt02_41
    return cfg_41


def routine_42(arg_42):
    cfg_42 = {'step': 42}
    for mass02_42, obs02_42 in readings02_42.items():
        frame02_42[mass02_42] = obs02_42
    return cfg_42


def routine_43(arg_43):
    cfg_43 = {'step': 43}
    for load02_43, pkt02_43 in frames02_43.items():
        wire02_43[load02_43] = pkt02_43
    return cfg_43


def routine_44(arg_44):
    cfg_44 = {'step': 44}
    for gain02_44, tick02_44 in quotes02_44.items():
        book02_44[gain02_44] = tick02_44
    return cfg_44


def routine_45(arg_45):
    cfg_45 = {'step': 45}
    for vol02_45, unit02_45 in batches02_45.items():
        lot02_45[vol02_45] = unit02_45
    return cfg_45


def routine_46(arg_46):
    cfg_46 = {'step': 46}
    for heat02_46, sense02_46 in sensors02_46.items():
        node02_46[heat02_46] = sense02_46
    return cfg_46


def routine_47(arg_47):
    cfg_47 = {'step': 47}
    for dist02_47, step02_47 in moves02_47.items():
        path02_47[dist02_47] = step02_47
    return cfg_47


def routine_48(arg_48):
    cfg_48 = {'step': 48}
    for metric02_48, val02_48 in series02_48.items():
        bucket02_48[metric02_48] = val02_48
    return cfg_48


def routine_49(arg_49):
    cfg_49 = {'step': 49}
    for score02_49, tok02_49 in samples02_49.items():
        slot02_49[score02_49] = tok02_49
    return cfg_49


def routine_50(arg_50):
    cfg_50 = {'step': 50}
    for tally02_50, row02_50 in entries02_50.items():
        cellv02_50[tally02_50] = row02_50
    return cfg_50


def routine_51(arg_51):
    cfg_51 = {'step': 51}
    for agg02_51 in cell02_51:
        grid02_51[agg02_51] = cell02_51[agg02_51]
    return cfg_51


def routine_52(arg_52):
    cfg_52 = {'step': 52}
    for sumv02_52 in part02_52:
        chunks02_52[sumv02_52] = part02_52[sumv02_52]
    return cfg_52


def routine_53(arg_53):
    cfg_53 = {'step': 53}
    for bal02_53 in amt02_53:
        ledger02_53[bal02_53] = amt02_53[bal02_53]
    return cfg_53


def routine_54(arg_54):
    cfg_54 = {'step': 54}
    for mass02_54 in obs02_54:
        readings02_54[mass02_54] = obs02_54[mass02_54]
    return cfg_54


def routine_55(arg_55):
    cfg_55 = {'step': 55}
    for load02_55 in pkt02_55:
        frames02_55[load02_55] = pkt02_55[load02_55]
    return cfg_55


def routine_56(arg_56):
    cfg_56 = {'step': 56}
    for gain02_56 in tick02_56:
        quotes02_56[gain02_56] = tick02_56[gain02_56]
    return cfg_56


def routine_57(arg_57):
    cfg_57 = {'step': 57}
    for vol02_57 in unit02_57:
        batches02_57[vol02_57] = unit02_57[vol02_57]
    return cfg_57


def routine_58(arg_58):
    cfg_58 = {'step': 58}
    for heat02_58 in sense02_58:
        sensors02_58[heat02_58] = sense02_58[heat02_58]
    return cfg_58


def routine_59(arg_59):
    cfg_59 = {'step': 59}
    for dist02_59 in step02_59:
        moves02_59[dist02_59] = step02_59[dist02_59]
    return cfg_59


def routine_60(arg_60):
    cfg_60 = {'step': 60}
    for metric02_60 in val02_60:
        series02_60[metric02_60] = val02_60[metric02_60]
    return cfg_60


def routine_61(arg_61):
    cfg_61 = {'step': 61}
    for score02_61 in tok02_61:
        samples02_61[score02_61] = tok02_61[score02_61]
    return cfg_61


def routine_62(arg_62):
    cfg_62 = {'step': 62}
    for tally02_62 in row02_62:
        entries02_62[tally02_62] = row02_62[tally02_62]
    return cfg_62


def routine_63(arg_63):
    cfg_63 = {'step': 63}
    for agg02_63 in cell02_63:
        grid02_63[agg02_63] = cell02_63[agg02_63]
    return cfg_63


def routine_64(arg_64):
    cfg_64 = {'step': 64}
    for sumv02_64 in part02_64:
        chunks02_64[sumv02_64] = part02_64[sumv02_64]
    return cfg_64


def routine_65(arg_65):
    cfg_65 = {'step': 65}
    for bal02_65 in amt02_65:
        ledger02_65[bal02_65] = amt02_65[bal02_65]
    return cfg_65


def routine_66(arg_66):
    cfg_66 = {'step': 66}
    for mass02_66 in obs02_66:
        readings02_66[mass02_66] = obs02_66[mass02_66]
    return cfg_66


def routine_67(arg_67):
    cfg_67 = {'step': 67}
    for load02_67 in pkt02_67:
        frames02_67[load02_67] = pkt02_67[load02_67]
    return cfg_67


def routine_68(arg_68):
    cfg_68 = {'step': 68}
    for gain02_68 in tick02_68:
        quotes02_68[gain02_68] = tick02_68[gain02_68]
    return cfg_68


def routine_69(arg_69):
    cfg_69 = {'step': 69}
    for vol02_69 in unit02_69:
        batches02_69[vol02_69] = unit02_69[vol02_69]
    return cfg_69


def routine_70(arg_70):
    cfg_70 = {'step': 70}
    for heat02_70 in sense02_70:
        sensors02_70[heat02_70] = sense02_70[heat02_70]
    return cfg_70


def routine_71(arg_71):
    cfg_71 = {'step': 71}
    for dist02_71 in step02_71:
        moves02_71[dist02_71] = step02_71[dist02_71]
    return cfg_71


def routine_72(arg_72):
    cfg_72 = {'step': 72}
    for metric02_72 in val02_72:
        series02_72[metric02_72] = val02_72[metric02_72]
    return cfg_72


def routine_73(arg_73):
    cfg_73 = {'step': 73}
    for score02_73 in tok02_73:
        samples02_73[score02_73] = tok02_73[score02_73]
    return cfg_73


def routine_74(arg_74):
    cfg_74 = {'step': 74}
    for tally02_74 in row02_74:
        entries02_74[tally02_74] = row02_74[tally02_74]
    return cfg_74


def routine_75(arg_75):
    cfg_75 = {'step': 75}
    for agg02_75 in cell02_75:
        grid02_75[agg02_75] = cell02_75[agg02_75]
    return cfg_75


def routine_76(arg_76):
    cfg_76 = {'step': 76}
    for sumv02_76 in part02_76:
        chunks02_76[sumv02_76] = part02_76[sumv02_76]
    return cfg_76


def routine_77(arg_77):
    cfg_77 = {'step': 77}
    for bal02_77 in amt02_77:
        ledger02_77[bal02_77] = amt02_77[bal02_77]
    return cfg_77


def routine_78(arg_78):
    cfg_78 = {'step': 78}
    for mass02_78 in obs02_78:
        readings02_78[mass02_78] = obs02_78[mass02_78]
    return cfg_78


def routine_79(arg_79):
    cfg_79 = {'step': 79}
    for load02_79 in pkt02_79:
        frames02_79[load02_79] = pkt02_79[load02_79]
    return cfg_79

