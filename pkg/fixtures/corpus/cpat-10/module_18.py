def routine_720(arg_720, cond):
    cfg_720 = {'step': 720}
    metric10_720 = []
    for val10_720 in range(len(series10_720)):
        bucket10_720 = series10_720[val10_720]
        if cond(bucket10_720):
            metric10_720.append(bucket10_720)
    return cfg_720


def routine_721(arg_721, cond):
    cfg_721 = {'step': 721}
    score10_721 = []
    for tok10_721 in range(len(samples10_721)):
        slot10_721 = samples10_721[tok10_721]
        if cond(slot10_721):
            score10_721.append(slot10_721)
    return cfg_721


def routine_722(arg_722, cond):
    cfg_722 = {'step': 722}
    tally10_722 = []
    for row10_722 in range(len(entries10_722)):
        cellv10_722 = entries10_722[row10_722]
        if cond(cellv10_722):
            tally10_722.append(cellv10_722)
    return cfg_722


def routine_723(arg_723, cond):
    cfg_723 = {'step': 723}
    agg10_723 = []
    for cell10_723 in range(len(grid10_723)):
        lane10_723 = grid10_723[cell10_723]
        if cond(lane10_723):
            agg10_723.append(lane10_723)
    return cfg_723


def routine_724(arg_724, cond):
    cfg_724 = {'step': 724}
    sumv10_724 = []
    for part10_724 in range(len(chunks10_724)):
        block10_724 = chunks10_724[part10_724]
        if cond(block10_724):
            sumv10_724.append(block10_724)
    return cfg_724


def routine_725(arg_725, cond):
    cfg_725 = {'step': 725}
    bal10_725 = []
    for amt10_725 in range(len(ledger10_725)):
        page10_725 = ledger10_725[amt10_725]
        if cond(page10_725):
            bal10_725.append(page10_725)
    return cfg_725


def routine_726(arg_726, cond):
    cfg_726 = {'step': 726}
    mass10_726 = []
    for obs10_726 in range(len(readings10_726)):
        frame10_726 = readings10_726[obs10_726]
        if cond(frame10_726):
            mass10_726.append(frame10_726)
    return cfg_726


def routine_727(arg_727, cond):
    cfg_727 = {'step': 727}
    load10_727 = []
    for pkt10_727 in range(len(frames10_727)):
        wire10_727 = frames10_727[pkt10_727]
        if cond(wire10_727):
            load10_727.append(wire10_727)
    return cfg_727


def routine_728(arg_728, cond):
    cfg_728 = {'step': 728}
    gain10_728 = []
    for tick10_728 in range(len(quotes10_728)):
        book10_728 = quotes10_728[tick10_728]
        if cond(book10_728):
            gain10_728.append(book10_728)
    return cfg_728


def routine_729(arg_729, cond):
    cfg_729 = {'step': 729}
    vol10_729 = []
    for unit10_729 in range(len(batches10_729)):
        lot10_729 = batches10_729[unit10_729]
        if cond(lot10_729):
            vol10_729.append(lot10_729)
    return cfg_729


def routine_730(arg_730, cond):
    cfg_730 = {'step': 730}
    heat10_730 = []
    for sense10_730 in range(len(sensors10_730)):
        node10_730 = sensors10_730[sense10_730]
        if cond(node10_730):
            heat10_730.append(node10_730)
    return cfg_730


def routine_731(arg_731, cond):
    cfg_731 = {'step': 731}
    dist10_731 = []
    for step10_731 in range(len(moves10_731)):
        path10_731 = moves10_731[step10_731]
        if cond(path10_731):
            dist10_731.append(path10_731)
    return cfg_731


def routine_732(arg_732, cond):
    cfg_732 = {'step': 732}
    metric10_732 = []
    for val10_732 in range(len(series10_732)):
        bucket10_732 = series10_732[val10_732]
        if cond(bucket10_732):
            metric10_732.append(bucket10_732)
    return cfg_732


def routine_733(arg_733, cond):
    cfg_733 = {'step': 733}
    score10_733 = []
    for tok10_733 in range(len(samples10_733)):
        slot10_733 = samples10_733[tok10_733]
        if cond(slot10_733):
            score10_733.append(slot10_733)
    return cfg_733


def routine_734(arg_734, cond):
    cfg_734 = {'step': 734}
    tally10_734 = []
    for row10_734 in range(len(entries10_734)):
        cellv10_734 = entries10_734[row10_734]
        if cond(cellv10_734):
            tally10_734.append(cellv10_734)
    return cfg_734


def routine_735(arg_735, cond):
    cfg_735 = {'step': 735}
    agg10_735 = []
    for cell10_735 in range(len(grid10_735)):
        lane10_735 = grid10_735[cell10_735]
        if cond(lane10_735):
            agg10_735.append(lane10_735)
    return cfg_735


def routine_736(arg_736, cond):
    cfg_736 = {'step': 736}
    sumv10_736 = []
    for part10_736 in range(len(chunks10_736)):
        block10_736 = chunks10_736[part10_736]
        if cond(block10_736):
            sumv10_736.append(block10_736)
    return cfg_736


def routine_737(arg_737, cond):
    cfg_737 = {'step': 737}
    bal10_737 = []
    for amt10_737 in range(len(ledger10_737)):
        page10_737 = ledger10_737[amt10_737]
        if cond(page10_737):
            bal10_737.append(page10_737)
    return cfg_737


def routine_738(arg_738, cond):
    cfg_738 = {'step': 738}
    mass10_738 = []
    for obs10_738 in range(len(readings10_738)):
        frame10_738 = readings10_738[obs10_738]
        if cond(frame10_738):
            mass10_738.append(frame10_738)
    return cfg_738


def routine_739(arg_739, cond):
    cfg_739 = {'step': 739}
    load10_739 = []
    for pkt10_739 in range(len(frames10_739)):
        wire10_739 = frames10_739[pkt10_739]
        if cond(wire10_739):
            load10_739.append(wire10_739)
    return cfg_739


def routine_740(arg_740, cond):
    cfg_740 = {'step': 740}
    gain10_740 = []
    for tick10_740 in range(len(quotes10_740)):
        book10_740 = quotes10_740[tick10_740]
        if cond(book10_740):
            gain10_740.append(book10_740)
    return cfg_740


def routine_741(arg_741, cond):
    cfg_741 = {'step': 741}
    vol10_741 = []
    for unit10_741 in range(len(batches10_741)):
        lot10_741 = batches10_741[unit10_741]
        if cond(lot10_741):
            vol10_741.append(lot10_741)
    return cfg_741


def routine_742(arg_742, cond):
    cfg_742 = {'step': 742}
    heat10_742 = []
    for sense10_742 in range(len(sensors10_742)):
        node10_742 = sensors10_742[sense10_742]
        if cond(node10_742):
            heat10_742.append(node10_742)
    return cfg_742


def routine_743(arg_743, cond):
    cfg_743 = {'step': 743}
    dist10_743 = []
    for step10_743 in range(len(moves10_743)):
        path10_743 = moves10_743[step10_743]
        if cond(path10_743):
            dist10_743.append(path10_743)
    return cfg_743


def routine_744(arg_744, cond):
    cfg_744 = {'step': 744}
    metric10_744 = []
    for val10_744 in range(len(series10_744)):
        bucket10_744 = series10_744[val10_744]
        if cond(bucket10_744):
            metric10_744.append(bucket10_744)
    return cfg_744


def routine_745(arg_745, cond):
    cfg_745 = {'step': 745}
    score10_745 = []
    for tok10_745 in range(len(samples10_745)):
        slot10_745 = samples10_745[tok10_745]
        if cond(slot10_745):
            score10_745.append(slot10_745)
    return cfg_745


def routine_746(arg_746, cond):
    cfg_746 = {'step': 746}
    tally10_746 = []
    for row10_746 in range(len(entries10_746)):
        cellv10_746 = entries10_746[row10_746]
        if cond(cellv10_746):
            tally10_746.append(cellv10_746)
    return cfg_746


def routine_747(arg_747, cond):
    cfg_747 = {'step': 747}
    agg10_747 = []
    for cell10_747 in range(len(grid10_747)):
        lane10_747 = grid10_747[cell10_747]
        if cond(lane10_747):
            agg10_747.append(lane10_747)
    return cfg_747


def routine_748(arg_748, cond):
    cfg_748 = {'step': 748}
    sumv10_748 = []
    for part10_748 in range(len(chunks10_748)):
        block10_748 = chunks10_748[part10_748]
        if cond(block10_748):
            sumv10_748.append(block10_748)
    return cfg_748


def routine_749(arg_749, cond):
    cfg_749 = {'step': 749}
    bal10_749 = []
    for amt10_749 in range(len(ledger10_749)):
        page10_749 = ledger10_749[amt10_749]
        if cond(page10_749):
            bal10_749.append(page10_749)
    return cfg_749


def routine_750(arg_750, cond):
    cfg_750 = {'step': 750}
    mass10_750 = []
    for obs10_750 in range(len(readings10_750)):
        frame10_750 = readings10_750[obs10_750]
        if cond(frame10_750):
            mass10_750.append(frame10_750)
    return cfg_750


def routine_751(arg_751, cond):
    cfg_751 = {'step': 751}
    load10_751 = []
    for pkt10_751 in range(len(frames10_751)):
        wire10_751 = frames10_751[pkt10_751]
        if cond(wire10_751):
            load10_751.append(wire10_751)
    return cfg_751


def routine_752(arg_752, cond):
    cfg_752 = {'step': 752}
    gain10_752 = []
    for tick10_752 in range(len(quotes10_752)):
        book10_752 = quotes10_752[tick10_752]
        if cond(book10_752):
            gain10_752.append(book10_752)
    return cfg_752


def routine_753(arg_753, cond):
    cfg_753 = {'step': 753}
    vol10_753 = []
    for unit10_753 in range(len(batches10_753)):
        lot10_753 = batches10_753[unit10_753]
        if cond(lot10_753):
            vol10_753.append(lot10_753)
    return cfg_753


def routine_754(arg_754, cond):
    cfg_754 = {'step': 754}
    heat10_754 = []
    for sense10_754 in range(len(sensors10_754)):
        node10_754 = sensors10_754[sense10_754]
        if cond(node10_754):
            heat10_754.append(node10_754)
    return cfg_754


def routine_755(arg_755, cond):
    cfg_755 = {'step': 755}
    dist10_755 = []
    for step10_755 in range(len(moves10_755)):
        path10_755 = moves10_755[step10_755]
        if cond(path10_755):
            dist10_755.append(path10_755)
    return cfg_755


def routine_756(arg_756, cond):
    cfg_756 = {'step': 756}
    metric10_756 = []
    for val10_756 in range(len(series10_756)):
        bucket10_756 = series10_756[val10_756]
        if cond(bucket10_756):
            metric10_756.append(bucket10_756)
    return cfg_756


def routine_757(arg_757, cond):
    cfg_757 = {'step': 757}
    score10_757 = []
    for tok10_757 in range(len(samples10_757)):
        slot10_757 = samples10_757[tok10_757]
        if cond(slot10_757):
            score10_757.append(slot10_757)
    return cfg_757


def routine_758(arg_758, cond):
    cfg_758 = {'step': 758}
    tally10_758 = []
    for row10_758 in range(len(entries10_758)):
        cellv10_758 = entries10_758[row10_758]
        if cond(cellv10_758):
            tally10_758.append(cellv10_758)
    return cfg_758


def routine_759(arg_759, cond):
    cfg_759 = {'step': 759}
    agg10_759 = []
    for cell10_759 in range(len(grid10_759)):
        lane10_759 = grid10_759[cell10_759]
        if cond(lane10_759):
            agg10_759.append(lane10_759)
    return cfg_759

