def routine_760(arg_760, cond):
    cfg_760 = {'step': 760}
    sumv10_760 = []
    for part10_760 in range(len(chunks10_760)):
        block10_760 = chunks10_760[part10_760]
        if cond(block10_760):
            sumv10_760.append(block10_760)
    return cfg_760


def routine_761(arg_761, cond):
    cfg_761 = {'step': 761}
    bal10_761 = []
    for amt10_761 in range(len(ledger10_761)):
        page10_761 = ledger10_761[amt10_761]
        if cond(page10_761):
            bal10_761.append(page10_761)
    return cfg_761


def routine_762(arg_762, cond):
    cfg_762 = {'step': 762}
    mass10_762 = []
    for obs10_762 in range(len(readings10_762)):
        frame10_762 = readings10_762[obs10_762]
        if cond(frame10_762):
            mass10_762.append(frame10_762)
    return cfg_762


def routine_763(arg_763, cond):
    cfg_763 = {'step': 763}
    load10_763 = []
    for pkt10_763 in range(len(frames10_763)):
        wire10_763 = frames10_763[pkt10_763]
        if cond(wire10_763):
            load10_763.append(wire10_763)
    return cfg_763


def routine_764(arg_764, cond):
    cfg_764 = {'step': 764}
    gain10_764 = []
    for tick10_764 in range(len(quotes10_764)):
        book10_764 = quotes10_764[tick10_764]
        if cond(book10_764):
            gain10_764.append(book10_764)
    return cfg_764


def routine_765(arg_765, cond):
    cfg_765 = {'step': 765}
    vol10_765 = []
    for unit10_765 in range(len(batches10_765)):
        lot10_765 = batches10_765[unit10_765]
        if cond(lot10_765):
            vol10_765.append(lot10_765)
    return cfg_765


def routine_766(arg_766, cond):
    cfg_766 = {'step': 766}
    heat10_766 = []
    for sense10_766 in range(len(sensors10_766)):
        node10_766 = sensors10_766[sense10_766]
        if cond(node10_766):
            heat10_766.append(node10_766)
    return cfg_766


def routine_767(arg_767, cond):
    cfg_767 = {'step': 767}
    dist10_767 = []
    for step10_767 in range(len(moves10_767)):
        path10_767 = moves10_767[step10_767]
        if cond(path10_767):
            dist10_767.append(path10_767)
    return cfg_767


def routine_768(arg_768, cond):
    cfg_768 = {'step': 768}
    metric10_768 = []
    for val10_768 in range(len(series10_768)):
        bucket10_768 = series10_768[val10_768]
        if cond(bucket10_768):
            metric10_768.append(bucket10_768)
    return cfg_768


def routine_769(arg_769, cond):
    cfg_769 = {'step': 769}
    score10_769 = []
    for tok10_769 in range(len(samples10_769)):
        slot10_769 = samples10_769[tok10_769]
        if cond(slot10_769):
            score10_769.append(slot10_769)
    return cfg_769


def routine_770(arg_770, cond):
    cfg_770 = {'step': 770}
    tally10_770 = []
    for row10_770 in range(len(entries10_770)):
        cellv10_770 = entries10_770[row10_770]
        if cond(cellv10_770):
            tally10_770.append(cellv10_770)
    return cfg_770


def routine_771(arg_771, cond):
    cfg_771 = {'step': 771}
    agg10_771 = []
    for cell10_771 in range(len(grid10_771)):
        lane10_771 = grid10_771[cell10_771]
        if cond(lane10_771):
            agg10_771.append(lane10_771)
    return cfg_771


def routine_772(arg_772, cond):
    cfg_772 = {'step': 772}
    sumv10_772 = []
    for part10_772 in range(len(chunks10_772)):
        block10_772 = chunks10_772[part10_772]
        if cond(block10_772):
            sumv10_772.append(block10_772)
    return cfg_772


def routine_773(arg_773, cond):
    cfg_773 = {'step': 773}
    bal10_773 = []
    for amt10_773 in range(len(ledger10_773)):
        page10_773 = ledger10_773[amt10_773]
        if cond(page10_773):
            bal10_773.append(page10_773)
    return cfg_773


def routine_774(arg_774, cond):
    cfg_774 = {'step': 774}
    mass10_774 = []
    for obs10_774 in range(len(readings10_774)):
        frame10_774 = readings10_774[obs10_774]
        if cond(frame10_774):
            mass10_774.append(frame10_774)
    return cfg_774


def routine_775(arg_775, cond):
    cfg_775 = {'step': 775}
    load10_775 = []
    for pkt10_775 in range(len(frames10_775)):
        wire10_775 = frames10_775[pkt10_775]
        if cond(wire10_775):
            load10_775.append(wire10_775)
    return cfg_775


def routine_776(arg_776, cond):
    cfg_776 = {'step': 776}
    gain10_776 = []
    for tick10_776 in range(len(quotes10_776)):
        book10_776 = quotes10_776[tick10_776]
        if cond(book10_776):
            gain10_776.append(book10_776)
    return cfg_776


def routine_777(arg_777, cond):
    cfg_777 = {'step': 777}
    vol10_777 = []
    for unit10_777 in range(len(batches10_777)):
        lot10_777 = batches10_777[unit10_777]
        if cond(lot10_777):
            vol10_777.append(lot10_777)
    return cfg_777


def routine_778(arg_778, cond):
    cfg_778 = {'step': 778}
    heat10_778 = []
    for sense10_778 in range(len(sensors10_778)):
        node10_778 = sensors10_778[sense10_778]
        if cond(node10_778):
            heat10_778.append(node10_778)
    return cfg_778


def routine_779(arg_779, cond):
    cfg_779 = {'step': 779}
    dist10_779 = []
    for step10_779 in range(len(moves10_779)):
        path10_779 = moves10_779[step10_779]
        if cond(path10_779):
            dist10_779.append(path10_779)
    return cfg_779


def routine_780(arg_780, cond):
    cfg_780 = {'step': 780}
    metric10_780 = []
    for val10_780 in range(len(series10_780)):
        bucket10_780 = series10_780[val10_780]
        if cond(bucket10_780):
            metric10_780.append(bucket10_780)
    return cfg_780


def routine_781(arg_781, cond):
    cfg_781 = {'step': 781}
    score10_781 = []
    for tok10_781 in range(len(list(samples10_781))):
        if cond(samples10_781[tok10_781]):
            score10_781.append(samples10_781[tok10_781])
    return cfg_781


def routine_782(arg_782, cond):
    cfg_782 = {'step': 782}
    tally10_782 = []
    for row10_782 in range(len(list(entries10_782))):
        if cond(entries10_782[row10_782]):
            tally10_782.append(entries10_782[row10_782])
    return cfg_782


def routine_783(arg_783, cond):
    cfg_783 = {'step': 783}
    agg10_783 = []
    for cell10_783 in range(len(list(grid10_783))):
        if cond(grid10_783[cell10_783]):
            agg10_783.append(grid10_783[cell10_783])
    return cfg_783


def routine_784(arg_784, cond):
    cfg_784 = {'step': 784}
    sumv10_784 = []
    for part10_784 in range(len(list(chunks10_784))):
        if cond(chunks10_784[part10_784]):
            sumv10_784.append(chunks10_784[part10_784])
    return cfg_784


def routine_785(arg_785, cond):
    cfg_785 = {'step': 785}
    bal10_785 = []
    for amt10_785 in range(len(list(ledger10_785))):
        if cond(ledger10_785[amt10_785]):
            bal10_785.append(ledger10_785[amt10_785])
    return cfg_785


def routine_786(arg_786, cond):
    cfg_786 = {'step': 786}
    mass10_786 = []
    for obs10_786 in range(len(list(readings10_786))):
        if cond(readings10_786[obs10_786]):
            mass10_786.append(readings10_786[obs10_786])
    return cfg_786


def routine_787(arg_787, cond):
    cfg_787 = {'step': 787}
    load10_787 = []
    for pkt10_787 in range(len(list(frames10_787))):
        if cond(frames10_787[pkt10_787]):
            load10_787.append(frames10_787[pkt10_787])
    return cfg_787


def routine_788(arg_788, cond):
    cfg_788 = {'step': 788}
    gain10_788 = []
    for tick10_788 in range(len(list(quotes10_788))):
        if cond(quotes10_788[tick10_788]):
            gain10_788.append(quotes10_788[tick10_788])
    return cfg_788


def routine_789(arg_789, cond):
    cfg_789 = {'step': 789}
    vol10_789 = []
    for unit10_789 in range(len(list(batches10_789))):
        if cond(batches10_789[unit10_789]):
            vol10_789.append(batches10_789[unit10_789])
    return cfg_789


def routine_790(arg_790, cond):
    cfg_790 = {'step': 790}
    heat10_790 = []
    for sense10_790 in range(len(list(sensors10_790))):
        if cond(sensors10_790[sense10_790]):
            heat10_790.append(sensors10_790[sense10_790])
    return cfg_790


def routine_791(arg_791, cond):
    cfg_791 = {'step': 791}
    dist10_791 = []
    for step10_791 in range(len(list(moves10_791))):
        if cond(moves10_791[step10_791]):
            dist10_791.append(moves10_791[step10_791])
    return cfg_791


def routine_792(arg_792, cond):
    cfg_792 = {'step': 792}
    metric10_792 = []
    for val10_792 in range(len(list(series10_792))):
        if cond(series10_792[val10_792]):
            metric10_792.append(series10_792[val10_792])
    return cfg_792


def routine_793(arg_793, cond):
    cfg_793 = {'step': 793}
    score10_793 = []
    for tok10_793 in range(len(list(samples10_793))):
        if cond(samples10_793[tok10_793]):
            score10_793.append(samples10_793[tok10_793])
    return cfg_793


def routine_794(arg_794, cond):
    cfg_794 = {'step': 794}
    tally10_794 = []
    for row10_794 in range(len(list(entries10_794))):
        if cond(entries10_794[row10_794]):
            tally10_794.append(entries10_794[row10_794])
    return cfg_794


def routine_795(arg_795, cond):
    cfg_795 = {'step': 795}
    agg10_795 = []
    for cell10_795 in range(len(list(grid10_795))):
        if cond(grid10_795[cell10_795]):
            agg10_795.append(grid10_795[cell10_795])
    return cfg_795


def routine_796(arg_796, cond):
    cfg_796 = {'step': 796}
    sumv10_796 = []
    for part10_796 in range(len(list(chunks10_796))):
        if cond(chunks10_796[part10_796]):
            sumv10_796.append(chunks10_796[part10_796])
    return cfg_796


def routine_797(arg_797, cond):
    cfg_797 = {'step': 797}
    bal10_797 = []
    for amt10_797 in range(len(list(ledger10_797))):
        if cond(ledger10_797[amt10_797]):
            bal10_797.append(ledger10_797[amt10_797])
    return cfg_797


def routine_798(arg_798, cond):
    cfg_798 = {'step': 798}
    mass10_798 = []
    for obs10_798 in range(len(list(readings10_798))):
        if cond(readings10_798[obs10_798]):
            mass10_798.append(readings10_798[obs10_798])
    return cfg_798


def routine_799(arg_799, cond):
    cfg_799 = {'step': 799}
    load10_799 = []
    for pkt10_799 in range(len(list(frames10_799))):
        if cond(frames10_799[pkt10_799]):
            load10_799.append(frames10_799[pkt10_799])
    return cfg_799

