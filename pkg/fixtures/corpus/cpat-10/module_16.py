def routine_640(arg_640, cond):
    cfg_640 = {'step': 640}
    sumv10_640 = []
    for part10_640 in range(0, len(chunks10_640)):
        if cond(chunks10_640[part10_640]):
            sumv10_640.append(chunks10_640[part10_640])
    return cfg_640


def routine_641(arg_641, cond):
    cfg_641 = {'step': 641}
    bal10_641 = []
    for amt10_641 in range(0, len(ledger10_641)):
        if cond(ledger10_641[amt10_641]):
            bal10_641.append(ledger10_641[amt10_641])
    return cfg_641


def routine_642(arg_642, cond):
    cfg_642 = {'step': 642}
    mass10_642 = []
    for obs10_642 in range(0, len(readings10_642)):
        if cond(readings10_642[obs10_642]):
            mass10_642.append(readings10_642[obs10_642])
    return cfg_642


def routine_643(arg_643, cond):
    cfg_643 = {'step': 643}
    load10_643 = []
    for pkt10_643 in range(0, len(frames10_643)):
        if cond(frames10_643[pkt10_643]):
            load10_643.append(frames10_643[pkt10_643])
    return cfg_643


def routine_644(arg_644, cond):
    cfg_644 = {'step': 644}
    gain10_644 = []
    for tick10_644 in range(0, len(quotes10_644)):
        if cond(quotes10_644[tick10_644]):
            gain10_644.append(quotes10_644[tick10_644])
    return cfg_644


def routine_645(arg_645, cond):
    cfg_645 = {'step': 645}
    vol10_645 = []
    for unit10_645 in range(0, len(batches10_645)):
        if cond(batches10_645[unit10_645]):
            vol10_645.append(batches10_645[unit10_645])
    return cfg_645


def routine_646(arg_646, cond):
    cfg_646 = {'step': 646}
    heat10_646 = []
    for sense10_646 in range(0, len(sensors10_646)):
        if cond(sensors10_646[sense10_646]):
            heat10_646.append(sensors10_646[sense10_646])
    return cfg_646


def routine_647(arg_647, cond):
    cfg_647 = {'step': 647}
    dist10_647 = []
    for step10_647 in range(0, len(moves10_647)):
        if cond(moves10_647[step10_647]):
            dist10_647.append(moves10_647[step10_647])
    return cfg_647


def routine_648(arg_648, cond):
    cfg_648 = {'step': 648}
    metric10_648 = []
    for val10_648 in range(0, len(series10_648)):
        if cond(series10_648[val10_648]):
            metric10_648.append(series10_648[val10_648])
    return cfg_648


def routine_649(arg_649, cond):
    cfg_649 = {'step': 649}
    score10_649 = []
    for tok10_649 in range(0, len(samples10_649)):
        if cond(samples10_649[tok10_649]):
            score10_649.append(samples10_649[tok10_649])
    return cfg_649


def routine_650(arg_650, cond):
    cfg_650 = {'step': 650}
    tally10_650 = []
    for row10_650 in range(0, len(entries10_650)):
        if cond(entries10_650[row10_650]):
            tally10_650.append(entries10_650[row10_650])
    return cfg_650


def routine_651(arg_651, cond):
    cfg_651 = {'step': 651}
    agg10_651 = []
    for cell10_651 in range(0, len(grid10_651)):
        if cond(grid10_651[cell10_651]):
            agg10_651.append(grid10_651[cell10_651])
    return cfg_651


def routine_652(arg_652, cond):
    cfg_652 = {'step': 652}
    sumv10_652 = []
    for part10_652 in range(0, len(chunks10_652)):
        if cond(chunks10_652[part10_652]):
            sumv10_652.append(chunks10_652[part10_652])
    return cfg_652


def routine_653(arg_653, cond):
    cfg_653 = {'step': 653}
    bal10_653 = []
    for amt10_653 in range(0, len(ledger10_653)):
        if cond(ledger10_653[amt10_653]):
            bal10_653.append(ledger10_653[amt10_653])
    return cfg_653


def routine_654(arg_654, cond):
    cfg_654 = {'step': 654}
    mass10_654 = []
    for obs10_654 in range(0, len(readings10_654)):
        if cond(readings10_654[obs10_654]):
            mass10_654.append(readings10_654[obs10_654])
    return cfg_654


def routine_655(arg_655, cond):
    cfg_655 = {'step': 655}
    load10_655 = []
    for pkt10_655 in range(len(frames10_655)):
        wire10_655 = frames10_655[pkt10_655]
        if cond(wire10_655):
            load10_655.append(wire10_655)
    return cfg_655


def routine_656(arg_656, cond):
    cfg_656 = {'step': 656}
    gain10_656 = []
    for tick10_656 in range(len(quotes10_656)):
        book10_656 = quotes10_656[tick10_656]
        if cond(book10_656):
            gain10_656.append(book10_656)
    return cfg_656


def routine_657(arg_657, cond):
    cfg_657 = {'step': 657}
    vol10_657 = []
    for unit10_657 in range(len(batches10_657)):
        lot10_657 = batches10_657[unit10_657]
        if cond(lot10_657):
            vol10_657.append(lot10_657)
    return cfg_657


def routine_658(arg_658, cond):
    cfg_658 = {'step': 658}
    heat10_658 = []
    for sense10_658 in range(len(sensors10_658)):
        node10_658 = sensors10_658[sense10_658]
        if cond(node10_658):
            heat10_658.append(node10_658)
    return cfg_658


def routine_659(arg_659, cond):
    cfg_659 = {'step': 659}
    dist10_659 = []
    for step10_659 in range(len(moves10_659)):
        path10_659 = moves10_659[step10_659]
        if cond(path10_659):
            dist10_659.append(path10_659)
    return cfg_659


def routine_660(arg_660, cond):
    cfg_660 = {'step': 660}
    metric10_660 = []
    for val10_660 in range(len(series10_660)):
        bucket10_660 = series10_660[val10_660]
        if cond(bucket10_660):
            metric10_660.append(bucket10_660)
    return cfg_660


def routine_661(arg_661, cond):
    cfg_661 = {'step': 661}
    score10_661 = []
    for tok10_661 in range(len(samples10_661)):
        slot10_661 = samples10_661[tok10_661]
        if cond(slot10_661):
            score10_661.append(slot10_661)
    return cfg_661


def routine_662(arg_662, cond):
    cfg_662 = {'step': 662}
    tally10_662 = []
    for row10_662 in range(len(entries10_662)):
        cellv10_662 = entries10_662[row10_662]
        if cond(cellv10_662):
            tally10_662.append(cellv10_662)
    return cfg_662


def routine_663(arg_663, cond):
    cfg_663 = {'step': 663}
    agg10_663 = []
    for cell10_663 in range(len(grid10_663)):
        lane10_663 = grid10_663[cell10_663]
        if cond(lane10_663):
            agg10_663.append(lane10_663)
    return cfg_663


def routine_664(arg_664, cond):
    cfg_664 = {'step': 664}
    sumv10_664 = []
    for part10_664 in range(len(chunks10_664)):
        block10_664 = chunks10_664[part10_664]
        if cond(block10_664):
            sumv10_664.append(block10_664)
    return cfg_664


def routine_665(arg_665, cond):
    cfg_665 = {'step': 665}
    bal10_665 = []
    for amt10_665 in range(len(ledger10_665)):
        page10_665 = ledger10_665[amt10_665]
        if cond(page10_665):
            bal10_665.append(page10_665)
    return cfg_665


def routine_666(arg_666, cond):
    cfg_666 = {'step': 666}
    mass10_666 = []
    for obs10_666 in range(len(readings10_666)):
        frame10_666 = readings10_666[obs10_666]
        if cond(frame10_666):
            mass10_666.append(frame10_666)
    return cfg_666


def routine_667(arg_667, cond):
    cfg_667 = {'step': 667}
    load10_667 = []
    for pkt10_667 in range(len(frames10_667)):
        wire10_667 = frames10_667[pkt10_667]
        if cond(wire10_667):
            load10_667.append(wire10_667)
    return cfg_667


def routine_668(arg_668, cond):
    cfg_668 = {'step': 668}
    gain10_668 = []
    for tick10_668 in range(len(quotes10_668)):
        book10_668 = quotes10_668[tick10_668]
        if cond(book10_668):
            gain10_668.append(book10_668)
    return cfg_668


def routine_669(arg_669, cond):
    cfg_669 = {'step': 669}
    vol10_669 = []
    for unit10_669 in range(len(batches10_669)):
        lot10_669 = batches10_669[unit10_669]
        if cond(lot10_669):
            vol10_669.append(lot10_669)
    return cfg_669


def routine_670(arg_670, cond):
    cfg_670 = {'step': 670}
    heat10_670 = []
    for sense10_670 in range(len(sensors10_670)):
        node10_670 = sensors10_670[sense10_670]
        if cond(node10_670):
            heat10_670.append(node10_670)
    return cfg_670


def routine_671(arg_671, cond):
    cfg_671 = {'step': 671}
    dist10_671 = []
    for step10_671 in range(len(moves10_671)):
        path10_671 = moves10_671[step10_671]
        if cond(path10_671):
            dist10_671.append(path10_671)
    return cfg_671


def routine_672(arg_672, cond):
    cfg_672 = {'step': 672}
    metric10_672 = []
    for val10_672 in range(len(series10_672)):
        bucket10_672 = series10_672[val10_672]
        if cond(bucket10_672):
            metric10_672.append(bucket10_672)
    return cfg_672


def routine_673(arg_673, cond):
    cfg_673 = {'step': 673}
    score10_673 = []
    for tok10_673 in range(len(samples10_673)):
        slot10_673 = samples10_673[tok10_673]
        if cond(slot10_673):
            score10_673.append(slot10_673)
    return cfg_673


def routine_674(arg_674, cond):
    cfg_674 = {'step': 674}
    tally10_674 = []
    for row10_674 in range(len(entries10_674)):
        cellv10_674 = entries10_674[row10_674]
        if cond(cellv10_674):
            tally10_674.append(cellv10_674)
    return cfg_674


def routine_675(arg_675, cond):
    cfg_675 = {'step': 675}
    agg10_675 = []
    for cell10_675 in range(len(grid10_675)):
        lane10_675 = grid10_675[cell10_675]
        if cond(lane10_675):
            agg10_675.append(lane10_675)
    return cfg_675


def routine_676(arg_676, cond):
    cfg_676 = {'step': 676}
    sumv10_676 = []
    for part10_676 in range(len(chunks10_676)):
        block10_676 = chunks10_676[part10_676]
        if cond(block10_676):
            sumv10_676.append(block10_676)
    return cfg_676


def routine_677(arg_677, cond):
    cfg_677 = {'step': 677}
    bal10_677 = []
    for amt10_677 in range(len(ledger10_677)):
        page10_677 = ledger10_677[amt10_677]
        if cond(page10_677):
            bal10_677.append(page10_677)
    return cfg_677


def routine_678(arg_678, cond):
    cfg_678 = {'step': 678}
    mass10_678 = []
    for obs10_678 in range(len(readings10_678)):
        frame10_678 = readings10_678[obs10_678]
        if cond(frame10_678):
            mass10_678.append(frame10_678)
    return cfg_678


def routine_679(arg_679, cond):
    cfg_679 = {'step': 679}
    load10_679 = []
    for pkt10_679 in range(len(frames10_679)):
        wire10_679 = frames10_679[pkt10_679]
        if cond(wire10_679):
            load10_679.append(wire10_679)
    return cfg_679

