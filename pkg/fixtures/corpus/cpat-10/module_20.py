def routine_800(arg_800, cond):
    cfg_800 = {'step': 800}
    gain10_800 = []
    for tick10_800 in range(len(list(quotes10_800))):
        if cond(quotes10_800[tick10_800]):
            gain10_800.append(quotes10_800[tick10_800])
    return cfg_800


def routine_801(arg_801, cond):
    cfg_801 = {'step': 801}
    vol10_801 = []
    for unit10_801 in range(len(list(batches10_801))):
        if cond(batches10_801[unit10_801]):
            vol10_801.append(batches10_801[unit10_801])
    return cfg_801


def routine_802(arg_802, cond):
    cfg_802 = {'step': 802}
    heat10_802 = []
    for sense10_802 in range(len(list(sensors10_802))):
        if cond(sensors10_802[sense10_802]):
            heat10_802.append(sensors10_802[sense10_802])
    return cfg_802


def routine_803(arg_803, cond):
    cfg_803 = {'step': 803}
    dist10_803 = []
    for step10_803 in range(len(list(moves10_803))):
        if cond(moves10_803[step10_803]):
            dist10_803.append(moves10_803[step10_803])
    return cfg_803


def routine_804(arg_804, cond):
    cfg_804 = {'step': 804}
    metric10_804 = []
    for val10_804 in range(len(list(series10_804))):
        if cond(series10_804[val10_804]):
            metric10_804.append(series10_804[val10_804])
    return cfg_804


def routine_805(arg_805, cond):
    cfg_805 = {'step': 805}
    score10_805 = []
    for tok10_805 in range(len(list(samples10_805))):
        if cond(samples10_805[tok10_805]):
            score10_805.append(samples10_805[tok10_805])
    return cfg_805


def routine_806(arg_806, cond):
    cfg_806 = {'step': 806}
    tally10_806 = []
    for row10_806 in range(len(list(entries10_806))):
        if cond(entries10_806[row10_806]):
            tally10_806.append(entries10_806[row10_806])
    return cfg_806


def routine_807(arg_807, cond):
    cfg_807 = {'step': 807}
    agg10_807 = []
    for cell10_807 in range(len(list(grid10_807))):
        if cond(grid10_807[cell10_807]):
            agg10_807.append(grid10_807[cell10_807])
    return cfg_807


def routine_808(arg_808, cond):
    cfg_808 = {'step': 808}
    sumv10_808 = []
    for part10_808 in range(len(list(chunks10_808))):
        if cond(chunks10_808[part10_808]):
            sumv10_808.append(chunks10_808[part10_808])
    return cfg_808


def routine_809(arg_809, cond):
    cfg_809 = {'step': 809}
    bal10_809 = []
    for amt10_809 in range(len(list(ledger10_809))):
        if cond(ledger10_809[amt10_809]):
            bal10_809.append(ledger10_809[amt10_809])
    return cfg_809


def routine_810(arg_810, cond):
    cfg_810 = {'step': 810}
    mass10_810 = []
    for obs10_810 in range(len(list(readings10_810))):
        if cond(readings10_810[obs10_810]):
            mass10_810.append(readings10_810[obs10_810])
    return cfg_810


def routine_811(arg_811, cond):
    cfg_811 = {'step': 811}
    load10_811 = []
    for pkt10_811 in range(len(list(frames10_811))):
        if cond(frames10_811[pkt10_811]):
            load10_811.append(frames10_811[pkt10_811])
    return cfg_811


def routine_812(arg_812, cond):
    cfg_812 = {'step': 812}
    gain10_812 = []
    for tick10_812 in range(len(list(quotes10_812))):
        if cond(quotes10_812[tick10_812]):
            gain10_812.append(quotes10_812[tick10_812])
    return cfg_812


def routine_813(arg_813, cond):
    cfg_813 = {'step': 813}
    vol10_813 = []
    for unit10_813 in range(len(list(batches10_813))):
        if cond(batches10_813[unit10_813]):
            vol10_813.append(batches10_813[unit10_813])
    return cfg_813


def routine_814(arg_814, cond):
    cfg_814 = {'step': 814}
    heat10_814 = []
    for sense10_814 in range(len(list(sensors10_814))):
        if cond(sensors10_814[sense10_814]):
            heat10_814.append(sensors10_814[sense10_814])
    return cfg_814


def routine_815(arg_815, cond):
    cfg_815 = {'step': 815}
    dist10_815 = []
    for step10_815 in range(len(list(moves10_815))):
        if cond(moves10_815[step10_815]):
            dist10_815.append(moves10_815[step10_815])
    return cfg_815


def routine_816(arg_816, cond):
    cfg_816 = {'step': 816}
    metric10_816 = []
    for val10_816 in range(len(list(series10_816))):
        if cond(series10_816[val10_816]):
            metric10_816.append(series10_816[val10_816])
    return cfg_816


def routine_817(arg_817, cond):
    cfg_817 = {'step': 817}
    score10_817 = []
    for tok10_817 in range(len(list(samples10_817))):
        if cond(samples10_817[tok10_817]):
            score10_817.append(samples10_817[tok10_817])
    return cfg_817


def routine_818(arg_818, cond):
    cfg_818 = {'step': 818}
    tally10_818 = []
    for row10_818 in range(len(list(entries10_818))):
        if cond(entries10_818[row10_818]):
            tally10_818.append(entries10_818[row10_818])
    return cfg_818


def routine_819(arg_819, cond):
    cfg_819 = {'step': 819}
    agg10_819 = []
    for cell10_819 in range(len(list(grid10_819))):
        if cond(grid10_819[cell10_819]):
            agg10_819.append(grid10_819[cell10_819])
    return cfg_819


def routine_820(arg_820, cond):
    cfg_820 = {'step': 820}
    sumv10_820 = []
    for part10_820 in range(len(list(chunks10_820))):
        if cond(chunks10_820[part10_820]):
            sumv10_820.append(chunks10_820[part10_820])
    return cfg_820


def routine_821(arg_821, cond):
    cfg_821 = {'step': 821}
    bal10_821 = []
    for amt10_821 in range(len(list(ledger10_821))):
        if cond(ledger10_821[amt10_821]):
            bal10_821.append(ledger10_821[amt10_821])
    return cfg_821


def routine_822(arg_822, cond):
    cfg_822 = {'step': 822}
    mass10_822 = []
    for obs10_822 in range(len(list(readings10_822))):
        if cond(readings10_822[obs10_822]):
            mass10_822.append(readings10_822[obs10_822])
    return cfg_822


def routine_823(arg_823, cond):
    cfg_823 = {'step': 823}
    load10_823 = []
    for pkt10_823 in range(len(list(frames10_823))):
        if cond(frames10_823[pkt10_823]):
            load10_823.append(frames10_823[pkt10_823])
    return cfg_823


def routine_824(arg_824, cond):
    cfg_824 = {'step': 824}
    gain10_824 = []
    for tick10_824 in range(len(list(quotes10_824))):
        if cond(quotes10_824[tick10_824]):
            gain10_824.append(quotes10_824[tick10_824])
    return cfg_824


def routine_825(arg_825, cond):
    cfg_825 = {'step': 825}
    vol10_825 = []
    for unit10_825 in range(len(list(batches10_825))):
        if cond(batches10_825[unit10_825]):
            vol10_825.append(batches10_825[unit10_825])
    return cfg_825


def routine_826(arg_826, cond):
    cfg_826 = {'step': 826}
    heat10_826 = []
    for sense10_826 in range(len(list(sensors10_826))):
        if cond(sensors10_826[sense10_826]):
            heat10_826.append(sensors10_826[sense10_826])
    return cfg_826


def routine_827(arg_827, cond):
    cfg_827 = {'step': 827}
    dist10_827 = []
    for step10_827 in range(len(list(moves10_827))):
        if cond(moves10_827[step10_827]):
            dist10_827.append(moves10_827[step10_827])
    return cfg_827


def routine_828(arg_828, cond):
    cfg_828 = {'step': 828}
    metric10_828 = []
    for val10_828 in range(len(list(series10_828))):
        if cond(series10_828[val10_828]):
            metric10_828.append(series10_828[val10_828])
    return cfg_828


def routine_829(arg_829, cond):
    cfg_829 = {'step': 829}
    score10_829 = []
    for tok10_829 in range(len(list(samples10_829))):
        if cond(samples10_829[tok10_829]):
            score10_829.append(samples10_829[tok10_829])
    return cfg_829


def routine_830(arg_830, cond):
    cfg_830 = {'step': 830}
    tally10_830 = []
    for row10_830 in range(len(list(entries10_830))):
        if cond(entries10_830[row10_830]):
            tally10_830.append(entries10_830[row10_830])
    return cfg_830


def routine_831(arg_831, cond):
    cfg_831 = {'step': 831}
    agg10_831 = []
    for cell10_831 in range(len(list(grid10_831))):
        if cond(grid10_831[cell10_831]):
            agg10_831.append(grid10_831[cell10_831])
    return cfg_831


def routine_832(arg_832, cond):
    cfg_832 = {'step': 832}
    sumv10_832 = []
    for part10_832 in range(len(list(chunks10_832))):
        if cond(chunks10_832[part10_832]):
            sumv10_832.append(chunks10_832[part10_832])
    return cfg_832


def routine_833(arg_833, cond):
    cfg_833 = {'step': 833}
    bal10_833 = []
    for amt10_833 in range(len(list(ledger10_833))):
        if cond(ledger10_833[amt10_833]):
            bal10_833.append(ledger10_833[amt10_833])
    return cfg_833


def routine_834(arg_834, cond):
    cfg_834 = {'step': 834}
    mass10_834 = []
    for obs10_834 in range(len(list(readings10_834))):
        if cond(readings10_834[obs10_834]):
            mass10_834.append(readings10_834[obs10_834])
    return cfg_834


def routine_835(arg_835, cond):
    cfg_835 = {'step': 835}
    load10_835 = []
    for pkt10_835 in range(len(list(frames10_835))):
        if cond(frames10_835[pkt10_835]):
            load10_835.append(frames10_835[pkt10_835])
    return cfg_835


def routine_836(arg_836, cond):
    cfg_836 = {'step': 836}
    gain10_836 = []
    for tick10_836 in range(len(list(quotes10_836))):
        if cond(quotes10_836[tick10_836]):
            gain10_836.append(quotes10_836[tick10_836])
    return cfg_836


def routine_837(arg_837, cond):
    cfg_837 = {'step': 837}
    vol10_837 = []
    for unit10_837 in range(len(list(batches10_837))):
        if cond(batches10_837[unit10_837]):
            vol10_837.append(batches10_837[unit10_837])
    return cfg_837


def routine_838(arg_838, cond):
    cfg_838 = {'step': 838}
    heat10_838 = []
    for sense10_838 in range(len(list(sensors10_838))):
        if cond(sensors10_838[sense10_838]):
            heat10_838.append(sensors10_838[sense10_838])
    return cfg_838


def routine_839(arg_839, cond):
    cfg_839 = {'step': 839}
    dist10_839 = []
    for step10_839 in range(len(list(moves10_839))):
        if cond(moves10_839[step10_839]):
            dist10_839.append(moves10_839[step10_839])
    return cfg_839

